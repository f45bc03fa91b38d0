#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "kg/errors.hpp"

namespace kg {

using Rational = mpq_class;

std::string to_string(const Rational& q);

// Laurent polynomial in A with exact rational coefficients.
// Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT: constants convert implicitly
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}

  static LaurentPoly monomial(int exponent, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  // multiply by A^k
  LaurentPoly shifted(int k) const;
  // A -> A^-1
  LaurentPoly inverted() const;
  // value at A = 1
  Rational at_one() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void add_term(int e, const Rational& c);
  Terms terms_;
};

// A^e
inline LaurentPoly A(int e = 1) { return LaurentPoly::monomial(e); }

LaurentPoly pow(const LaurentPoly& p, unsigned n);

enum class PolyOp { add, sub, mul };
LaurentPoly poly_op(const LaurentPoly& a, const LaurentPoly& b, PolyOp kind);

// Exact quotient if b divides a in the Laurent ring, else throws.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

// Parses the canonical rendering back.
LaurentPoly parse_laurent(const std::string& text);

// num/den kept in canonical form: gcd removed, den has minimal exponent 0
// and leading coefficient 1.
class RationalFunc {
 public:
  RationalFunc() = default;
  RationalFunc(const LaurentPoly& p);  // NOLINT
  RationalFunc(const Rational& c) : RationalFunc(LaurentPoly(c)) {}
  RationalFunc(int c) : RationalFunc(LaurentPoly(c)) {}
  RationalFunc(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == LaurentPoly(1); }

  RationalFunc& operator+=(const RationalFunc& o);
  RationalFunc& operator-=(const RationalFunc& o);
  RationalFunc& operator*=(const RationalFunc& o);
  RationalFunc& operator/=(const RationalFunc& o);
  RationalFunc operator-() const;

  friend RationalFunc operator+(RationalFunc a, const RationalFunc& b) { return a += b; }
  friend RationalFunc operator-(RationalFunc a, const RationalFunc& b) { return a -= b; }
  friend RationalFunc operator*(RationalFunc a, const RationalFunc& b) { return a *= b; }
  friend RationalFunc operator/(RationalFunc a, const RationalFunc& b) { return a /= b; }
  friend bool operator==(const RationalFunc& a, const RationalFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void canonicalize();
  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly(1);
};

enum class RfOp { add, sub, mul, div };
RationalFunc rf_op(const RationalFunc& a, const RationalFunc& b, RfOp kind);

RationalFunc parse_rational_func(const std::string& text);

// Truncated power series in h, coefficients c_0..c_N.
class Series {
 public:
  explicit Series(int order = 0);
  Series(int order, std::vector<Rational> coeffs);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int k) const { return c_[k]; }
  Rational& operator[](int k) { return c_[k]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  // index of the first nonzero coefficient, -1 if all vanish
  int valuation() const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const Rational& k, Series s);
  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  std::vector<Rational> c_;
};

// f expanded under A = exp(h), truncated at h^order.
Series series_at_exp(const RationalFunc& f, int order);
Series series_at_exp(const LaurentPoly& p, int order);

}  // namespace kg
