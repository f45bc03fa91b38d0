#include <doctest.h>

#include "kg/bracket.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace kg;
using kgtest::Letter;

namespace {

std::vector<Letter> random_word(std::mt19937_64& rng, int strands, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len), gen(1, strands - 1), s(0, 1);
  std::vector<Letter> w;
  for (int k = len(rng); k > 0; --k) w.push_back({gen(rng), s(rng) ? 1 : -1});
  return w;
}

LaurentPoly mirror_poly(const LaurentPoly& p) { return p.inverted(); }

}  // namespace

TEST_CASE("reference values") {
  CHECK(z_eval(named_diagram("unknot")) == LaurentPoly(1));
  CHECK(z_eval(named_diagram("two-circles")) == A(2) + A(-2));
  CHECK(z_eval(named_diagram("hopf+")) == A(4) + A(-4));
  CHECK(z_eval(named_diagram("kink+")) == A(3));
  CHECK(z_eval(named_diagram("kink-")) == A(-3));
  CHECK(p_eval(named_diagram("unknot-3-kinks")) == LaurentPoly(1));
  CHECK(p_eval(named_diagram("hopf+")) == A(-2) + A(-10));
  CHECK(z_eval(named_diagram("hopf-")) == A(4) + A(-4));
}

TEST_CASE("engine agrees with the braid oracle") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    int strands = 2 + t % 3;
    auto w = random_word(rng, strands, 9);
    Diagram d = kgtest::closure(strands, w);
    LaurentPoly want = kgtest::tl_z(strands, w);
    CHECK(bracket_naive(d) == want);
    CHECK(z_eval(d) == want);
    CHECK(p_eval(d) == kgtest::tl_p(strands, w));
    CHECK(components(d) == kgtest::braid_components(strands, w));
  }
}

TEST_CASE("z_eval matches the naive state sum on the corpus") {
  for (const auto& name : named_diagram_names()) {
    Diagram d = named_diagram(name);
    if (count_vertices(d) > 0 || count_crossings(d) > 12) continue;
    INFO(name);
    CHECK(z_eval(d) == bracket_naive(d));
  }
}

TEST_CASE("trefoil presentations agree") {
  LaurentPoly p = p_eval(named_diagram("trefoil+"));
  CHECK(p_eval(named_diagram("trefoil+stab")) == p);
  CHECK(p_eval(named_diagram("trefoil+conj")) == p);
  CHECK(p == kgtest::tl_p(2, {{1, 1}, {1, 1}, {1, 1}}));
}

TEST_CASE("skein relation on random sites") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 200; ++t) {
    int strands = 2 + t % 3;
    auto w = random_word(rng, strands, 7);
    std::size_t k = std::uniform_int_distribution<std::size_t>(0, w.size() - 1)(rng);
    auto plus = w, minus = w, zero = w;
    plus[k].sign = 1;
    minus[k].sign = -1;
    zero.erase(zero.begin() + static_cast<long>(k));
    LaurentPoly zp = z_eval(kgtest::closure(strands, plus));
    LaurentPoly zm = z_eval(kgtest::closure(strands, minus));
    Diagram d0 = kgtest::closure(strands, zero);
    LaurentPoly z0 = z_eval(d0);
    CHECK(z0 == kgtest::tl_z(strands, zero));
    CHECK(A(1) * zp - A(-1) * zm == (A(2) - A(-2)) * z0);
  }
}

TEST_CASE("kinks, circles and mirrors") {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 200; ++t) {
    int strands = 2 + t % 3;
    auto w = random_word(rng, strands, 7);
    Diagram d = kgtest::closure(strands, w);
    LaurentPoly z = z_eval(d);
    // a kink added by stabilization on a new strand
    auto wp = w, wm = w;
    wp.push_back({strands, 1});
    wm.push_back({strands, -1});
    CHECK(z_eval(kgtest::closure(strands + 1, wp)) == A(3) * z);
    CHECK(z_eval(kgtest::closure(strands + 1, wm)) == A(-3) * z);
    // and by the R1 move on a random arc
    auto sites = find_moves(d, Move::R1Pos, false);
    auto m = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
    CHECK(z_eval(apply_move(d, m)) == A(3) * z);
    Diagram c = d;
    ++c.free_loops;
    CHECK(z_eval(c) == (A(2) + A(-2)) * z);
    CHECK(z_eval(mirror(d)) == mirror_poly(z));
  }
}

TEST_CASE("p_eval is invariant under R1-R3") {
  std::mt19937_64 rng(55);
  for (int t = 0; t < 200; ++t) {
    Diagram d = kgtest::random_braid(rng, 4, 6);
    LaurentPoly p = p_eval(d);
    for (int k = 0; k < 3; ++k) {
      auto m = random_move(d, rng, false);
      if (!m) break;
      d = apply_move(d, *m);
    }
    CHECK(p_eval(d) == p);
  }
}

TEST_CASE("vertices and empty diagrams are rejected") {
  CHECK_THROWS_AS(z_eval(named_diagram("G_b_vertex")), InvalidDiagram);
  CHECK_THROWS_AS(bracket_naive(named_diagram("G_b_cvert")), InvalidDiagram);
  CHECK_THROWS_AS(z_eval(Diagram{}), InvalidDiagram);
}
