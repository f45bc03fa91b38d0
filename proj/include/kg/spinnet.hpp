#pragma once

#include <map>
#include <string>
#include <vector>

#include "kg/report.hpp"
#include "kg/ring.hpp"

namespace kg {

struct GaussianRational {
  Rational re, im;

  GaussianRational() = default;
  GaussianRational(const Rational& r, const Rational& i = 0) : re(r), im(i) {}  // NOLINT
  GaussianRational(int r) : re(r) {}                                             // NOLINT
  static GaussianRational i() { return {0, 1}; }

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  GaussianRational operator-() const { return {-re, -im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) { return a.re == b.re && a.im == b.im; }
  std::string to_string() const;
};

enum class TensorKind { Delta, EpsLower, EpsUpper };

// delta i j: upper i, lower j. epsL a b: both lower. epsU a b: both upper.
struct TensorFactor {
  TensorKind kind;
  std::string first, second;
};

struct TensorDiagram {
  std::vector<TensorFactor> factors;
};

TensorDiagram parse_tensor_diagram(const std::string& text);
std::string serialize(const TensorDiagram& td);

// Index labels that do not occur once upper and once lower.
std::vector<std::string> unpaired_indices(const TensorDiagram& td);

// Sum over all index values in {0,1}; each epsilon carries a factor sqrt(-1).
GaussianRational eval_tensor_diagram(const TensorDiagram& td);
// Same with some labels held fixed (open diagram).
GaussianRational eval_open(const TensorDiagram& td, const std::map<std::string, int>& fixed);

// Formal sum of permutations; a key p sends strand k to p[k].
struct PermElement {
  int n = 0;
  std::map<std::vector<int>, Rational> terms;
  PermElement compose(const PermElement& o) const;  // this after o
  friend bool operator==(const PermElement& a, const PermElement& b) { return a.n == b.n && a.terms == b.terms; }
  std::string to_string() const;
  // Entry of the operator on (C^2)^{tensor n}; upper/lower indices per strand.
  Rational entry(const std::vector<int>& upper, const std::vector<int>& lower) const;
};

PermElement symmetrizer(int n);
PermElement antisymmetrizer(int n);
bool is_zero_on_dim2(const PermElement& p);

// i + j + k even and no label exceeds the sum of the other two.
bool admissible(int i, int j, int k);

Report check_projector(int n);
Report check_tensor_spinor_identity();

struct FierzCheck {
  Rational unfold_coeff, plain_coeff;
  Report report;
};
FierzCheck check_fierz();

}  // namespace kg
