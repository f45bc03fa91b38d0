#pragma once

#include <random>

#include "kg/diagram.hpp"
#include "kg/ring.hpp"

namespace kgtest {

inline kg::LaurentPoly random_poly(std::mt19937_64& rng, int span = 4, int terms = 4) {
  std::uniform_int_distribution<int> e(-span, span), c(-5, 5), n(0, terms);
  kg::LaurentPoly p;
  for (int k = n(rng); k > 0; --k) p += kg::LaurentPoly::monomial(e(rng), kg::Rational(c(rng)));
  return p;
}

inline kg::LaurentPoly random_nonzero_poly(std::mt19937_64& rng, int span = 3) {
  for (;;) {
    auto p = random_poly(rng, span, 3);
    if (!p.is_zero()) return p;
  }
}

// Closure of a random braid word; letters may be vertices.
inline kg::Diagram random_braid(std::mt19937_64& rng, int max_strands, int max_len, int vertices = 0,
                                bool marked = false) {
  using kg::NodeKind;
  std::uniform_int_distribution<int> ns(2, max_strands);
  int strands = ns(rng);
  std::uniform_int_distribution<int> len(1, max_len), gen(1, strands - 1), sign(0, 1);
  std::vector<kg::BraidLetter> w;
  for (int k = len(rng); k > 0; --k) w.push_back({sign(rng) ? NodeKind::XPos : NodeKind::XNeg, gen(rng)});
  for (int v = 0; v < vertices; ++v) {
    std::uniform_int_distribution<std::size_t> at(0, w.size());
    NodeKind k = marked && v == 0 ? NodeKind::CVert : NodeKind::Vert;
    w.insert(w.begin() + at(rng), kg::BraidLetter{k, gen(rng)});
  }
  return kg::braid_closure("random", strands, w);
}

}  // namespace kgtest
