#pragma once

#include "kg/diagram.hpp"
#include "kg/ring.hpp"

namespace kg {

// -A^2 - A^-2
LaurentPoly loop_value();

// Orientation-free Kauffman bracket <d>, normalized so one circle gives 1.
LaurentPoly standard_bracket(const Diagram& d);

// Z(d) = (-1)^(c - 1 + w) <d>, by enumerating all 2^n states.
LaurentPoly bracket_naive(const Diagram& d);

// Same value by frontier contraction over the crossings.
LaurentPoly z_eval(const Diagram& d);

// A^(-3w) Z(d)
LaurentPoly p_eval(const Diagram& d);

}  // namespace kg
