#pragma once

#include "kg/diagram.hpp"
#include "kg/graphinv.hpp"
#include "kg/ring.hpp"

namespace kg {

struct VassilievReport {
  Series series{0};
  int vanishing_order = -1;  // -1: every coefficient up to the order is 0
  std::string to_string() const;
};

// P-level Vassiliev-scheme value expanded in h, A = exp(h).
VassilievReport vassiliev_series(const Diagram& g, int order);

// Named diagrams with exactly j plain vertices (no marked ones).
std::vector<std::string> graphs_with_vertices(int j);

// c_0 .. c_{j-1} vanish for every named graph with j vertices, 1 <= j <= 3.
Report vanishing_order_check(int j);

// h^0 coefficient of P equals 1 on every vertex-free named diagram.
Report classical_value_check();

}  // namespace kg
