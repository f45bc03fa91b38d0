#include "kg/vassiliev.hpp"

#include "kg/bracket.hpp"
#include "kg/parallel.hpp"

namespace kg {

std::string VassilievReport::to_string() const {
  return "series: " + series.to_string() + "\nvanishing order: " +
         (vanishing_order < 0 ? std::string("beyond truncation") : std::to_string(vanishing_order)) + "\n";
}

VassilievReport vassiliev_series(const Diagram& g, int order) {
  if (order < 0) throw Error("negative series order");
  VassilievReport r;
  r.series = series_at_exp(eval_graph(g, ResolutionScheme::vassiliev(), Level::P), order);
  r.vanishing_order = r.series.valuation();
  return r;
}

std::vector<std::string> graphs_with_vertices(int j) {
  std::vector<std::string> out;
  for (const auto& name : named_diagram_names()) {
    Diagram d = named_diagram(name);
    bool marked = false;
    int v = 0;
    for (auto k : d.nodes) {
      marked = marked || k == NodeKind::CVert;
      v += k == NodeKind::Vert;
    }
    if (!marked && v == j) out.push_back(name);
  }
  return out;
}

Report vanishing_order_check(int j) {
  if (j < 1 || j > 3) throw Error("vanishing order check needs 1 <= j <= 3");
  Report r;
  r.name = "vanishing below order " + std::to_string(j);
  auto names = graphs_with_vertices(j);
  std::vector<VassilievReport> res(names.size());
  parallel_for(static_cast<int>(names.size()), [&](int i) { res[i] = vassiliev_series(named_diagram(names[i]), j + 1); });
  for (std::size_t i = 0; i < names.size(); ++i) {
    bool ok = true;
    for (int k = 0; k < j; ++k) ok = ok && res[i].series[k] == 0;
    r.check(ok, names[i] + ": " + res[i].series.to_string());
  }
  if (names.empty()) r.check(false, "no graphs with " + std::to_string(j) + " vertices");
  return r;
}

Report classical_value_check() {
  Report r;
  r.name = "h^0 coefficient of vertex-free diagrams";
  std::vector<std::string> names = graphs_with_vertices(0);
  std::vector<Rational> c0(names.size());
  parallel_for(static_cast<int>(names.size()), [&](int i) { c0[i] = p_eval(named_diagram(names[i])).at_one(); });
  for (std::size_t i = 0; i < names.size(); ++i) {
    Diagram d = named_diagram(names[i]);
    r.check(c0[i] == 1, names[i] + " (" + std::to_string(components(d)) + " components): " + kg::to_string(c0[i]));
  }
  return r;
}

}  // namespace kg
