#include "kg/spinnet.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "kg/errors.hpp"
#include "kg/graphinv.hpp"

namespace kg {

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = r;
  return *this;
}

std::string GaussianRational::to_string() const {
  if (im == 0) return kg::to_string(re);
  std::string i = im == 1 ? "i" : im == -1 ? "-i" : kg::to_string(im) + "*i";
  if (re == 0) return i;
  return kg::to_string(re) + " + " + i;
}

TensorDiagram parse_tensor_diagram(const std::string& text) {
  TensorDiagram td;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string kw, a, b, extra;
    if (!(ls >> kw)) continue;
    if (!(ls >> a >> b) || (ls >> extra)) throw ParseError(lineno, kw, "expected two indices after");
    TensorKind k;
    if (kw == "delta") k = TensorKind::Delta;
    else if (kw == "epsL") k = TensorKind::EpsLower;
    else if (kw == "epsU") k = TensorKind::EpsUpper;
    else throw ParseError(lineno, kw, "unknown tensor");
    td.factors.push_back({k, a, b});
  }
  return td;
}

std::string serialize(const TensorDiagram& td) {
  std::string out;
  for (const auto& f : td.factors) {
    const char* kw = f.kind == TensorKind::Delta ? "delta" : f.kind == TensorKind::EpsLower ? "epsL" : "epsU";
    out += std::string(kw) + " " + f.first + " " + f.second + "\n";
  }
  return out;
}

namespace {

// label -> (upper count, lower count)
std::map<std::string, std::pair<int, int>> index_census(const TensorDiagram& td) {
  std::map<std::string, std::pair<int, int>> c;
  for (const auto& f : td.factors) {
    switch (f.kind) {
      case TensorKind::Delta:
        c[f.first].first++;
        c[f.second].second++;
        break;
      case TensorKind::EpsLower:
        c[f.first].second++;
        c[f.second].second++;
        break;
      case TensorKind::EpsUpper:
        c[f.first].first++;
        c[f.second].first++;
        break;
    }
  }
  return c;
}

int eps(int a, int b) { return a == b ? 0 : a == 0 ? 1 : -1; }

}  // namespace

std::vector<std::string> unpaired_indices(const TensorDiagram& td) {
  std::vector<std::string> out;
  for (const auto& [label, c] : index_census(td))
    if (c != std::make_pair(1, 1)) out.push_back(label);
  return out;
}

GaussianRational eval_open(const TensorDiagram& td, const std::map<std::string, int>& fixed) {
  auto census = index_census(td);
  std::vector<std::string> summed;
  for (const auto& [label, c] : census) {
    if (fixed.count(label)) continue;
    if (c != std::make_pair(1, 1)) throw Error("unpaired index '" + label + "'");
    summed.push_back(label);
  }
  if (summed.size() > 24) throw Error("too many indices");
  std::map<std::string, int> value = fixed;
  int eps_count = 0;
  for (const auto& f : td.factors) eps_count += f.kind != TensorKind::Delta;
  Rational total = 0;
  for (unsigned long mask = 0; mask < (1ul << summed.size()); ++mask) {
    for (std::size_t k = 0; k < summed.size(); ++k) value[summed[k]] = (mask >> k) & 1;
    int prod = 1;
    for (const auto& f : td.factors) {
      int a = value.at(f.first), b = value.at(f.second);
      prod *= f.kind == TensorKind::Delta ? (a == b) : eps(a, b);
      if (prod == 0) break;
    }
    total += prod;
  }
  GaussianRational phase(1);
  for (int k = 0; k < eps_count; ++k) phase *= GaussianRational::i();
  return phase * GaussianRational(total);
}

GaussianRational eval_tensor_diagram(const TensorDiagram& td) {
  auto bad = unpaired_indices(td);
  if (!bad.empty()) throw Error("unpaired index '" + bad.front() + "'");
  return eval_open(td, {});
}

PermElement PermElement::compose(const PermElement& o) const {
  if (n != o.n) throw Error("permutation sizes differ");
  PermElement r;
  r.n = n;
  for (const auto& [p, cp] : terms)
    for (const auto& [q, cq] : o.terms) {
      std::vector<int> s(n);
      for (int k = 0; k < n; ++k) s[k] = p[q[k]];
      r.terms[s] += cp * cq;
    }
  std::erase_if(r.terms, [](const auto& kv) { return kv.second == 0; });
  return r;
}

std::string PermElement::to_string() const {
  std::string out;
  for (const auto& [p, c] : terms) {
    if (!out.empty()) out += " + ";
    out += kg::to_string(c) + "*(";
    for (int k = 0; k < n; ++k) out += (k ? " " : "") + std::to_string(p[k]);
    out += ")";
  }
  return out.empty() ? "0" : out;
}

Rational PermElement::entry(const std::vector<int>& upper, const std::vector<int>& lower) const {
  Rational r = 0;
  for (const auto& [p, c] : terms) {
    bool hit = true;
    for (int k = 0; k < n && hit; ++k) hit = upper[k] == lower[p[k]];
    if (hit) r += c;
  }
  return r;
}

namespace {

int parity(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b) inv += p[a] > p[b];
  return inv % 2 ? -1 : 1;
}

PermElement young(int n, bool skew) {
  if (n < 1 || n > 5) throw Error("projector size must be 1..5");
  PermElement r;
  r.n = n;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  do {
    r.terms[p] = Rational(skew ? parity(p) : 1) / fact;
  } while (std::next_permutation(p.begin(), p.end()));
  return r;
}

}  // namespace

PermElement symmetrizer(int n) { return young(n, false); }
PermElement antisymmetrizer(int n) { return young(n, true); }

bool is_zero_on_dim2(const PermElement& p) {
  const int n = p.n;
  std::vector<int> up(n), lo(n);
  for (int m = 0; m < (1 << (2 * n)); ++m) {
    for (int k = 0; k < n; ++k) {
      up[k] = (m >> k) & 1;
      lo[k] = (m >> (n + k)) & 1;
    }
    if (p.entry(up, lo) != 0) return false;
  }
  return true;
}

bool admissible(int i, int j, int k) {
  if (i < 0 || j < 0 || k < 0) return false;
  return (i + j + k) % 2 == 0 && i + j + k >= 2 * std::max({i, j, k});
}

Report check_projector(int n) {
  if (n < 1 || n > 4) throw Error("check_projector needs 1 <= n <= 4");
  Report r;
  r.name = "projectors on " + std::to_string(n) + " strands";
  PermElement s = symmetrizer(n), a = antisymmetrizer(n);
  r.check(s.compose(s) == s, "symmetrizer idempotent");
  r.check(a.compose(a) == a, "antisymmetrizer idempotent");
  if (n >= 2) r.check(s.compose(a).terms.empty(), "symmetrizer * antisymmetrizer = 0");
  bool zero = is_zero_on_dim2(a);
  if (n >= 3) r.check(zero, "antisymmetrizer vanishes on dimension 2");
  else r.check(!zero, "antisymmetrizer nonzero on dimension 2");
  return r;
}

Report check_tensor_spinor_identity() {
  Report r;
  r.name = "spinor identity on indices";
  // (i eps^{ab})(i eps_{cd}) - delta^a_d delta^b_c + delta^a_c delta^b_d
  const std::pair<int, TensorDiagram> terms[] = {
      {1, {{{TensorKind::EpsUpper, "a", "b"}, {TensorKind::EpsLower, "c", "d"}}}},
      {-1, {{{TensorKind::Delta, "a", "d"}, {TensorKind::Delta, "b", "c"}}}},
      {1, {{{TensorKind::Delta, "a", "c"}, {TensorKind::Delta, "b", "d"}}}},
  };
  int zeros = 0;
  for (int m = 0; m < 16; ++m) {
    std::map<std::string, int> fixed{{"a", m & 1}, {"b", (m >> 1) & 1}, {"c", (m >> 2) & 1}, {"d", (m >> 3) & 1}};
    GaussianRational sum;
    for (const auto& [c, td] : terms) sum += GaussianRational(c) * eval_open(td, fixed);
    if (sum.is_zero()) ++zeros;
    else r.check(false, "assignment " + std::to_string(m) + ": " + sum.to_string());
  }
  r.check(zeros == 16, std::to_string(zeros) + "/16 assignments vanish");
  return r;
}

namespace {

using Mat = std::array<std::array<GaussianRational, 2>, 2>;

Mat mul(const Mat& x, const Mat& y) {
  Mat r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) r[i][j] += x[i][k] * y[k][j];
  return r;
}

std::array<Mat, 3> generators() {
  GaussianRational h(Rational(1, 2)), ih(0, Rational(1, 2));
  Mat t1{}, t2{}, t3{};
  t1[0][1] = t1[1][0] = h;
  t2[0][1] = -ih;
  t2[1][0] = ih;
  t3[0][0] = h;
  t3[1][1] = -h;
  return {t1, t2, t3};
}

int levi3(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  return (a + 1) % 3 == b ? 1 : -1;
}

}  // namespace

FierzCheck check_fierz() {
  FierzCheck f;
  Report& r = f.report;
  r.name = "su(2) generator identities";
  auto T = generators();
  auto lhs = [&](int i, int j, int k, int l) {
    GaussianRational s;
    for (const auto& t : T) s += t[i][j] * t[k][l];
    return s;
  };
  int good = 0;
  for (int m = 0; m < 16; ++m) {
    int i = m & 1, j = (m >> 1) & 1, k = (m >> 2) & 1, l = (m >> 3) & 1;
    Rational rhs = Rational(i == l && j == k ? 1 : 0) / 2 - Rational(i == j && k == l ? 1 : 0) / 4;
    if (lhs(i, j, k, l) == GaussianRational(rhs)) ++good;
    else r.check(false, "entry " + std::to_string(i) + std::to_string(j) + std::to_string(k) + std::to_string(l));
  }
  r.check(good == 16, "completeness relation " + std::to_string(good) + "/16 entries");

  // x from an entry where only the swap term survives, y where only the identity term does
  f.unfold_coeff = lhs(0, 1, 1, 0).re;
  f.plain_coeff = lhs(0, 0, 1, 1).re;
  r.check(lhs(0, 1, 1, 0).im == 0 && lhs(0, 0, 1, 1).im == 0, "extracted coefficients are real");
  r.check(f.unfold_coeff == fierz_unfold_coeff(), "swap coefficient " + to_string(f.unfold_coeff));
  r.check(f.plain_coeff == fierz_plain_coeff(), "identity coefficient " + to_string(f.plain_coeff));

  bool comm = true;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      Mat ab = mul(T[a], T[b]), ba = mul(T[b], T[a]);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          GaussianRational want;
          for (int c = 0; c < 3; ++c) want += GaussianRational(0, levi3(a, b, c)) * T[c][i][j];
          if (ab[i][j] - ba[i][j] != want) comm = false;
        }
    }
  r.check(comm, "[T_a, T_b] = i eps_abc T_c");

  bool trace = true;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      Mat p = mul(T[a], T[b]);
      trace = trace && p[0][0] + p[1][1] == GaussianRational(Rational(a == b ? 1 : 0) / 2);
    }
  r.check(trace, "Tr(T_a T_b) = 1/2 delta_ab");

  PermElement s2 = symmetrizer(2);
  bool dsym = true;
  for (int m = 0; m < 16; ++m) {
    std::vector<int> up{m & 1, (m >> 1) & 1}, lo{(m >> 2) & 1, (m >> 3) & 1};
    Rational want = Rational(int(up[0] == lo[0] && up[1] == lo[1]) + int(up[0] == lo[1] && up[1] == lo[0])) / 2;
    dsym = dsym && s2.entry(up, lo) == want;
  }
  r.check(dsym, "D^ab_cd = 1/2 (delta^a_c delta^b_d + delta^a_d delta^b_c)");
  return f;
}

}  // namespace kg
