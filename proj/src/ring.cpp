#include "kg/ring.hpp"

#include <algorithm>
#include <sstream>

namespace kg {

std::string to_string(const Rational& q) { return q.get_str(); }

// ---- LaurentPoly

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, const Rational& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(exponent, c);
  return p;
}

Rational LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

void LaurentPoly::add_term(int e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

Rational LaurentPoly::at_one() const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!out.empty()) out += " + ";
    if (e == 0) {
      out += c.get_str();
      continue;
    }
    if (c == 1) {
    } else if (c == -1) {
      out += "-";
    } else {
      out += c.get_str() + "*";
    }
    out += "A";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentPoly pow(const LaurentPoly& p, unsigned n) {
  LaurentPoly r(1);
  for (unsigned i = 0; i < n; ++i) r *= p;
  return r;
}

LaurentPoly poly_op(const LaurentPoly& a, const LaurentPoly& b, PolyOp kind) {
  switch (kind) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
  }
  return {};
}

namespace {

// Dense polynomials, ascending coefficients, no trailing zeros.
using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// p = dense * A^shift
Dense to_dense(const LaurentPoly& p, int& shift) {
  shift = p.min_exponent();
  Dense d;
  if (p.is_zero()) return d;
  d.resize(p.max_exponent() - shift + 1);
  for (const auto& [e, c] : p.terms()) d[e - shift] = c;
  return d;
}

LaurentPoly from_dense(const Dense& d, int shift) {
  LaurentPoly p;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) p += LaurentPoly::monomial(static_cast<int>(i) + shift, d[i]);
  return p;
}

void divmod(const Dense& a, const Dense& b, Dense& q, Dense& r) {
  r = a;
  trim(r);
  q.clear();
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  const int nb = static_cast<int>(b.size());
  for (int i = static_cast<int>(r.size()) - 1; i >= nb - 1; --i) {
    Rational f = r[i] / lead;
    if (f == 0) continue;
    int k = i - (nb - 1);
    q[k] = f;
    for (int j = 0; j < nb; ++j) r[k + j] -= f * b[j];
  }
  trim(q);
  trim(r);
}

Dense gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

}  // namespace

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  int sa = 0, sb = 0;
  Dense da = to_dense(a, sa), db = to_dense(b, sb);
  Dense q, r;
  divmod(da, db, q, r);
  if (!r.empty()) throw Error("inexact division: " + a.to_string() + " by " + b.to_string());
  return from_dense(q, sa - sb);
}

LaurentPoly parse_laurent(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s += ch;
  if (s.empty()) throw ParseError(1, text, "empty polynomial");
  LaurentPoly p;
  std::stringstream ss(s);
  std::string term;
  while (std::getline(ss, term, '+')) {
    if (term.empty()) throw ParseError(1, text, "malformed polynomial");
    auto pos = term.find('A');
    Rational c;
    int e = 0;
    try {
      if (pos == std::string::npos) {
        c = Rational(term);
      } else {
        std::string cs = term.substr(0, pos);
        if (!cs.empty() && cs.back() == '*') cs.pop_back();
        if (cs.empty()) c = 1;
        else if (cs == "-") c = -1;
        else c = Rational(cs);
        std::string es = term.substr(pos + 1);
        if (es.empty()) e = 1;
        else if (es[0] == '^') e = std::stoi(es.substr(1));
        else throw Error("bad exponent");
      }
    } catch (const std::exception&) {
      throw ParseError(1, term, "malformed polynomial term");
    }
    c.canonicalize();
    p += LaurentPoly::monomial(e, c);
  }
  return p;
}

// ---- RationalFunc

RationalFunc::RationalFunc(const LaurentPoly& p) : num_(p) { canonicalize(); }

RationalFunc::RationalFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  canonicalize();
}

void RationalFunc::canonicalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  int sn = 0, sd = 0;
  Dense n = to_dense(num_, sn), d = to_dense(den_, sd);
  Dense g = gcd(n, d);
  if (g.size() > 1) {
    Dense q, r;
    divmod(n, g, q, r);
    n = std::move(q);
    divmod(d, g, q, r);
    d = std::move(q);
  }
  Rational lead = d.back();
  for (auto& c : n) c /= lead;
  for (auto& c : d) c /= lead;
  num_ = from_dense(n, sn - sd);
  den_ = from_dense(d, 0);
}

RationalFunc& RationalFunc::operator+=(const RationalFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  canonicalize();
  return *this;
}

RationalFunc& RationalFunc::operator-=(const RationalFunc& o) { return *this += -o; }

RationalFunc& RationalFunc::operator*=(const RationalFunc& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

RationalFunc& RationalFunc::operator/=(const RationalFunc& o) {
  if (o.is_zero()) throw DivisionByZero();
  num_ *= o.den_;
  den_ *= o.num_;
  canonicalize();
  return *this;
}

RationalFunc RationalFunc::operator-() const {
  RationalFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string RationalFunc::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunc rf_op(const RationalFunc& a, const RationalFunc& b, RfOp kind) {
  switch (kind) {
    case RfOp::add: return a + b;
    case RfOp::sub: return a - b;
    case RfOp::mul: return a * b;
    case RfOp::div: return a / b;
  }
  return {};
}

RationalFunc parse_rational_func(const std::string& text) {
  std::string s = text;
  auto strip = [](std::string x) {
    auto b = x.find_first_not_of(" \t");
    auto e = x.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : x.substr(b, e - b + 1);
  };
  s = strip(s);
  if (!s.empty() && s.front() == '(') {
    auto mid = s.find(")/(");
    if (mid == std::string::npos || s.back() != ')') throw Error("malformed rational function '" + text + "'");
    return RationalFunc(parse_laurent(s.substr(1, mid - 1)),
                        parse_laurent(s.substr(mid + 3, s.size() - mid - 4)));
  }
  return RationalFunc(parse_laurent(s));
}

// ---- Series

Series::Series(int order) : c_(order + 1, Rational(0)) {}

Series::Series(int order, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  c_.resize(order + 1, Rational(0));
}

int Series::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return static_cast<int>(k);
  return -1;
}

Series& Series::operator+=(const Series& o) {
  for (std::size_t k = 0; k < c_.size() && k < o.c_.size(); ++k) c_[k] += o.c_[k];
  c_.resize(std::min(c_.size(), o.c_.size()));
  return *this;
}

Series& Series::operator-=(const Series& o) {
  for (std::size_t k = 0; k < c_.size() && k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  c_.resize(std::min(c_.size(), o.c_.size()));
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  int n = std::min(a.order(), b.order());
  Series r(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  return r;
}

Series operator*(const Rational& k, Series s) {
  for (auto& c : s.c_) c *= k;
  return s;
}

std::string Series::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (k) out += " + ";
    out += c_[k].get_str();
    if (k == 1) out += "*h";
    else if (k > 1) out += "*h^" + std::to_string(k);
  }
  return out;
}

Series series_at_exp(const LaurentPoly& p, int order) {
  Series s(order);
  for (const auto& [e, c] : p.terms()) {
    // c * exp(e h) = c * sum (e h)^k / k!
    Rational term = c;
    for (int k = 0; k <= order; ++k) {
      s[k] += term;
      term *= e;
      term /= k + 1;
    }
  }
  return s;
}

namespace {

Series divide(const Series& a, const Series& b) {
  Series q(a.order());
  for (int k = 0; k <= a.order(); ++k) {
    Rational v = a[k];
    for (int i = 1; i <= k; ++i) v -= b[i] * q[k - i];
    q[k] = v / b[0];
  }
  return q;
}

Series drop_low(const Series& s, int v, int order) {
  Series r(order);
  for (int k = 0; k <= order; ++k) r[k] = s[k + v];
  return r;
}

}  // namespace

Series series_at_exp(const RationalFunc& f, int order) {
  if (order < 0) throw Error("negative series order");
  if (f.is_polynomial()) return series_at_exp(f.num(), order);
  // den is a nonzero polynomial, so its expansion is nonzero at some order
  int v = 0;
  for (int m = order;; m += 4) {
    Series d = series_at_exp(f.den(), m);
    v = d.valuation();
    if (v >= 0) break;
  }
  Series num = series_at_exp(f.num(), order + v);
  Series den = series_at_exp(f.den(), order + v);
  for (int k = 0; k < v; ++k)
    if (num[k] != 0)
      throw PoleAtOrigin("pole at h = 0 in " + f.to_string());
  return divide(drop_low(num, v, order), drop_low(den, v, order));
}

}  // namespace kg
