#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kg/diagram.hpp"
#include "kg/report.hpp"
#include "kg/ring.hpp"

namespace kg {

// Weights for replacing a plain vertex by a positive crossing, a negative
// crossing, or the oriented smoothing.
struct ResolutionScheme {
  RationalFunc a, b, c;

  static ResolutionScheme vassiliev();       // (1, -1, 0)
  static ResolutionScheme casimir_plain();   // (1, 1, 0) / (A + A^-1)
  static ResolutionScheme casimir_marked();  // (1, -1, 0) / (4(A - A^-1))
};

struct Term {
  RationalFunc coeff;
  Diagram diagram;
};

struct FormalSum {
  std::vector<Term> terms;
};

// Merges terms with equal canonical diagrams, drops zero coefficients and
// orders terms by canonical text.
FormalSum collect(const FormalSum& s);
std::string to_string(const FormalSum& s);

enum class Level { P, Z };

enum class Replacement { Pos, Neg, Unfold, Reversed };

// Replaces one vertex. Pos/Neg keep the node as a crossing whose sign is
// +1/-1; Unfold is the orientation-compatible smoothing; Reversed is the
// other smoothing, with the affected loops re-oriented.
Diagram replace_vertex(const Diagram& g, int node, Replacement r);

// Whether the two strands through a vertex belong to one component.
bool same_component_at(const Diagram& g, int node);

// All replacement choices for every Vert node, in the given order (default:
// ascending). Choices with zero weight are skipped; terms are not collected.
FormalSum resolve_vertices(const Diagram& g, const ResolutionScheme& s, const std::vector<int>& order = {});

RationalFunc eval_sum(const FormalSum& s, Level level);
RationalFunc eval_graph(const Diagram& g, const ResolutionScheme& s, Level level = Level::P);

// Plain vertices with the Casimir plain weights, marked ones with the marked
// weights; Z level unless normalized, which multiplies by A^(-3 w(g)).
RationalFunc eval_with_casimir_marks(const Diagram& g, bool normalized = false);

// Constants of the vertex decomposition.
RationalFunc loop_t();       // A^2 + A^-2
RationalFunc vertex_C1();    // -1/2 (A^2 - A^-2)(t + 1)
RationalFunc vertex_C2();    //  2 (A^2 - A^-2)(t - 1)
RationalFunc sixgraph_a();
RationalFunc sixgraph_b();
RationalFunc sixgraph_c();
RationalFunc sixgraph_d();
// Fierz rewriting of the marked vertex: unfold and plain-vertex coefficients
Rational fierz_unfold_coeff();  // 1/2
Rational fierz_plain_coeff();   // -1/4

struct CasimirDecomposition {
  RationalFunc lhs, rhs, difference;
  RationalFunc plain, marked;      // F(plain), F(marked) at Z level
  RationalFunc f_pos, f_neg;       // Z of the crossing replacements
  RationalFunc f_pos_rebuilt, f_neg_rebuilt;
  Series lhs_series{1};
  Rational leading_formula;        // 8 (F(marked) - 3/4 F(plain)) at h = 0
  Report report;
};
CasimirDecomposition casimir_decompose(const Diagram& g);

struct SpinorCheck {
  int vertex = -1;
  int case_no = 0;  // 1: one component through the vertex, 2: two
  RationalFunc vertex_value, unfold_value, reversed_value, residual;
  Report report;
};
// Vertex index -1 picks the first plain vertex. Other vertices are evaluated
// with the Casimir weights on every side; a marked vertex whose strands end
// up with opposite relative orientation in the reversed term changes sign.
SpinorCheck check_spinor(const Diagram& g, int vertex = -1);

struct FourTerm {
  RationalFunc n, s, e, w, residual;
};
FourTerm check_four_term(const Diagram& n, const Diagram& s, const Diagram& e, const Diagram& w);

struct SixValent {
  RationalFunc route1, route2;  // P(G1) - P(G2), P(G3) - P(G4)
  bool agree = false;
};
// G1..G4 are N, S, W, E of the matched quadruple.
SixValent six_valent_eval(const Diagram& n, const Diagram& s, const Diagram& e, const Diagram& w);

// Small random weights q*A^e, for invariance tests.
ResolutionScheme random_scheme(std::mt19937_64& rng);

// Applies `steps` random moves per trial and compares P level values: p_eval
// for links; the Vassiliev, Casimir and one random scheme for graphs; the
// normalized marked evaluation when marked vertices are present.
Report check_reidemeister(const Diagram& g, int trials, int steps, std::uint64_t seed);

struct Prop31 {
  RationalFunc a1, a2;
  Report report;
};
Prop31 derive_prop31();

}  // namespace kg
