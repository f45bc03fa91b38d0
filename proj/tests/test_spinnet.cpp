#include <doctest.h>

#include <algorithm>
#include <random>

#include "kg/errors.hpp"
#include "kg/graphinv.hpp"
#include "kg/spinnet.hpp"

using namespace kg;

TEST_CASE("closed tensor diagrams") {
  CHECK(eval_tensor_diagram(parse_tensor_diagram("delta i i\n")) == GaussianRational(2));
  CHECK(eval_tensor_diagram(parse_tensor_diagram("epsL a b\nepsU a b\n")) == GaussianRational(-2));
  // eps_ab eps^bc is minus the identity, so a chain of four is Tr(1)
  CHECK(eval_tensor_diagram(parse_tensor_diagram("epsL a b\nepsU b c\nepsL c d\nepsU d a\n")) == GaussianRational(2));
  CHECK(eval_tensor_diagram(parse_tensor_diagram("delta i j\ndelta j k\ndelta k i\n")) == GaussianRational(2));
  CHECK(eval_tensor_diagram(parse_tensor_diagram("epsL a b\ndelta b c\nepsU c a\n")).to_string() == "2");
  CHECK_THROWS_AS(eval_tensor_diagram(parse_tensor_diagram("delta i j\n")), Error);
  CHECK_THROWS_AS(eval_tensor_diagram(parse_tensor_diagram("epsL a b\nepsL a b\n")), Error);
  CHECK_THROWS_AS(parse_tensor_diagram("gamma a b\n"), ParseError);
  TensorDiagram td = parse_tensor_diagram("epsL a b # comment\nepsU a b\n");
  CHECK(serialize(td) == "epsL a b\nepsU a b\n");
}

TEST_CASE("gaussian arithmetic") {
  GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  CHECK((GaussianRational(1, 2) * GaussianRational(3, -1)).to_string() == "5 + 5*i");
  CHECK(GaussianRational(0, -1).to_string() == "-i");
}

TEST_CASE("relabelling contracted indices") {
  std::mt19937_64 rng(4);
  const std::string names[] = {"a", "b", "c", "d", "e", "f"};
  std::uniform_int_distribution<int> kind(0, 2);
  for (int t = 0; t < 200; ++t) {
    // a random closed network: pair up 2k index slots
    int k = 1 + t % 3;
    std::vector<std::string> labels;
    for (int i = 0; i < k * 2; ++i) labels.push_back(names[i]);
    TensorDiagram td;
    std::vector<std::string> up = labels, lo = labels;
    std::shuffle(up.begin(), up.end(), rng);
    std::shuffle(lo.begin(), lo.end(), rng);
    // k deltas use one upper and one lower slot; the rest pair as eps
    std::size_t u = 0, l = 0;
    for (int f = 0; f < k; ++f) {
      switch (kind(rng)) {
        case 0:
          td.factors.push_back({TensorKind::Delta, up[u++], lo[l++]});
          td.factors.push_back({TensorKind::Delta, up[u++], lo[l++]});
          break;
        default:
          td.factors.push_back({TensorKind::EpsUpper, up[u], up[u + 1]});
          td.factors.push_back({TensorKind::EpsLower, lo[l], lo[l + 1]});
          u += 2;
          l += 2;
      }
    }
    GaussianRational v = eval_tensor_diagram(td);
    std::vector<std::string> perm(labels);
    std::shuffle(perm.begin(), perm.end(), rng);
    TensorDiagram r = td;
    auto rename = [&](std::string& s) { s = perm[s[0] - 'a'] + "'"; };
    for (auto& f : r.factors) {
      rename(f.first);
      rename(f.second);
    }
    CHECK(eval_tensor_diagram(r) == v);
  }
}

TEST_CASE("projectors") {
  PermElement s2 = antisymmetrizer(2);
  CHECK(s2.to_string() == "1/2*(0 1) + -1/2*(1 0)");
  PermElement y3 = symmetrizer(3);
  CHECK(y3.terms.size() == 6);
  for (const auto& [p, c] : y3.terms) CHECK(c == Rational(1, 6));
  CHECK(symmetrizer(1) == antisymmetrizer(1));
  CHECK(symmetrizer(1).terms.size() == 1);
  CHECK_THROWS_AS(symmetrizer(6), Error);
  CHECK_THROWS_AS(antisymmetrizer(0), Error);
  for (int n = 1; n <= 4; ++n) {
    Report r = check_projector(n);
    INFO(r.to_string());
    CHECK(r.ok);
  }
  CHECK(is_zero_on_dim2(antisymmetrizer(3)));
  CHECK_FALSE(is_zero_on_dim2(antisymmetrizer(2)));
  CHECK_FALSE(is_zero_on_dim2(symmetrizer(3)));
  CHECK(admissible(1, 1, 2));
  CHECK_FALSE(admissible(1, 1, 1));
  CHECK_FALSE(admissible(1, 1, 4));
}

TEST_CASE("spinor identity on indices") {
  Report r = check_tensor_spinor_identity();
  INFO(r.to_string());
  CHECK(r.ok);
}

TEST_CASE("fierz coefficients") {
  FierzCheck f = check_fierz();
  INFO(f.report.to_string());
  CHECK(f.report.ok);
  CHECK(f.unfold_coeff == Rational(1, 2));
  CHECK(f.plain_coeff == Rational(-1, 4));
  CHECK(f.unfold_coeff == fierz_unfold_coeff());
  CHECK(f.plain_coeff == fierz_plain_coeff());
}
