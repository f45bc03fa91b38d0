#include "kg/graphinv.hpp"

#include <array>
#include <functional>
#include <map>
#include <sstream>

#include "kg/bracket.hpp"
#include "kg/parallel.hpp"

namespace kg {

namespace {

int mod4(int x) { return ((x % 4) + 4) % 4; }

RationalFunc Apow(int e) { return RationalFunc(A(e)); }

// Removes `node`, joining its ports by `pass` (pass[s] = partner slot), and
// re-orients each loop through it so the lowest-numbered arc keeps its
// direction. newid maps old node indices to new ones (-1 for the removed).
Diagram rebuild(const Diagram& g, int node, const std::array<int, 4>& pass, std::vector<int>& newid) {
  PortIndex idx(g);
  Diagram r;
  r.name = g.name;
  r.free_loops = g.free_loops;
  newid.assign(g.nodes.size(), -1);
  for (int n = 0; n < g.node_count(); ++n)
    if (n != node) {
      newid[n] = r.node_count();
      r.nodes.push_back(g.nodes[n]);
    }
  struct Step {
    int arc;
    bool forward;
  };
  std::vector<bool> used(g.arcs.size(), false);
  for (int a0 = 0; a0 < g.arc_count(); ++a0) {
    if (used[a0]) continue;
    std::vector<Step> steps;
    int a = a0;
    bool fwd = true;
    do {
      used[a] = true;
      steps.push_back({a, fwd});
      Port head = fwd ? g.arcs[a].to : g.arcs[a].from;
      Port next = head.node == node ? Port{node, pass[head.slot]} : Port{head.node, mod4(head.slot + 2)};
      a = idx[next].arc;
      fwd = g.arcs[a].from == next;
    } while (a != a0);
    auto tail = [&](const Step& s) { return s.forward ? g.arcs[s.arc].from : g.arcs[s.arc].to; };
    auto head = [&](const Step& s) { return s.forward ? g.arcs[s.arc].to : g.arcs[s.arc].from; };
    std::size_t start = steps.size();
    for (std::size_t k = 0; k < steps.size(); ++k)
      if (tail(steps[k]).node != node) {
        start = k;
        break;
      }
    if (start == steps.size()) {
      ++r.free_loops;
      continue;
    }
    Port seg = tail(steps[start]);
    for (std::size_t k = 0; k < steps.size(); ++k) {
      Port h = head(steps[(start + k) % steps.size()]);
      if (h.node == node) continue;
      r.arcs.push_back({{newid[seg.node], seg.slot}, {newid[h.node], h.slot}});
      seg = {h.node, mod4(h.slot + 2)};
    }
  }
  return r;
}

int in_port(const Diagram& g, int node) {
  PortIndex idx(g);
  for (int s = 0; s < 4; ++s)
    if (!idx.at[node][s].out && !idx.at[node][mod4(s + 1)].out) return s;
  throw InvalidDiagram("node without adjacent in-ports");
}

Diagram replace_tracked(const Diagram& g, int node, Replacement r, std::vector<int>& newid) {
  require_valid(g);
  if (node < 0 || node >= g.node_count() || !is_vertex(g.nodes[node]))
    throw Error("node " + std::to_string(node) + " is not a vertex");
  int p = in_port(g, node);
  newid.resize(g.nodes.size());
  for (int n = 0; n < g.node_count(); ++n) newid[n] = n;
  switch (r) {
    case Replacement::Pos:
    case Replacement::Neg: {
      Diagram d = g;
      int over_in = r == Replacement::Pos ? p : p + 1;
      d.nodes[node] = over_in % 2 == 0 ? NodeKind::XPos : NodeKind::XNeg;
      return d;
    }
    case Replacement::Unfold: {
      std::array<int, 4> pass{};
      pass[mod4(p + 1)] = mod4(p + 2);
      pass[mod4(p + 2)] = mod4(p + 1);
      pass[p] = mod4(p + 3);
      pass[mod4(p + 3)] = p;
      return rebuild(g, node, pass, newid);
    }
    case Replacement::Reversed: {
      std::array<int, 4> pass{};
      pass[p] = mod4(p + 1);
      pass[mod4(p + 1)] = p;
      pass[mod4(p + 2)] = mod4(p + 3);
      pass[mod4(p + 3)] = mod4(p + 2);
      return rebuild(g, node, pass, newid);
    }
  }
  return g;
}

struct Weights {
  RationalFunc pos, neg, unfold;
};

// Expands every vertex in `order` (original indices) with its weights.
void expand(const Diagram& g, std::vector<int> ids, const std::vector<int>& order, std::size_t at,
            const RationalFunc& coeff, const std::function<Weights(NodeKind)>& weights, FormalSum& out) {
  if (coeff.is_zero()) return;
  if (at == order.size()) {
    out.terms.push_back({coeff, g});
    return;
  }
  int cur = -1;
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (ids[i] == order[at]) cur = static_cast<int>(i);
  if (cur < 0) throw Error("vertex vanished during resolution");
  Weights w = weights(g.nodes[cur]);
  const std::pair<Replacement, const RationalFunc*> choices[] = {
      {Replacement::Pos, &w.pos}, {Replacement::Neg, &w.neg}, {Replacement::Unfold, &w.unfold}};
  for (const auto& [r, weight] : choices) {
    if (weight->is_zero()) continue;
    std::vector<int> newid;
    Diagram d = replace_tracked(g, cur, r, newid);
    std::vector<int> nids(d.nodes.size(), -1);
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (newid[i] >= 0) nids[newid[i]] = ids[i];
    expand(d, nids, order, at + 1, coeff * *weight, weights, out);
  }
}

FormalSum resolve_with(const Diagram& g, const std::vector<int>& order0,
                       const std::function<Weights(NodeKind)>& weights) {
  require_valid(g);
  std::vector<int> order = order0;
  if (order.empty())
    for (int n = 0; n < g.node_count(); ++n)
      if (is_vertex(g.nodes[n])) order.push_back(n);
  std::vector<int> ids(g.nodes.size());
  for (int n = 0; n < g.node_count(); ++n) ids[n] = n;
  FormalSum out;
  expand(g, ids, order, 0, RationalFunc(1), weights, out);
  return out;
}

}  // namespace

ResolutionScheme ResolutionScheme::vassiliev() { return {RationalFunc(1), RationalFunc(-1), RationalFunc(0)}; }

ResolutionScheme ResolutionScheme::casimir_plain() {
  RationalFunc w = RationalFunc(1) / RationalFunc(A(1) + A(-1));
  return {w, w, RationalFunc(0)};
}

ResolutionScheme ResolutionScheme::casimir_marked() {
  RationalFunc w = RationalFunc(1) / RationalFunc((A(1) - A(-1)) * LaurentPoly(4));
  return {w, -w, RationalFunc(0)};
}

FormalSum collect(const FormalSum& s) {
  std::map<std::string, Term> acc;
  for (const auto& t : s.terms) {
    std::string key = canonical_text(t.diagram);
    auto it = acc.find(key);
    if (it == acc.end()) {
      Diagram c = canonical(t.diagram);
      acc.emplace(key, Term{t.coeff, c});
    } else {
      it->second.coeff += t.coeff;
    }
  }
  FormalSum out;
  for (auto& [k, t] : acc)
    if (!t.coeff.is_zero()) out.terms.push_back(std::move(t));
  return out;
}

std::string to_string(const FormalSum& s) {
  std::ostringstream out;
  out << "terms: " << s.terms.size() << "\n";
  for (std::size_t i = 0; i < s.terms.size(); ++i) {
    out << "term " << i << " coeff " << s.terms[i].coeff.to_string() << "\n";
    Diagram d = s.terms[i].diagram;
    d.name = "term" + std::to_string(i);
    out << serialize(d);
  }
  return out.str();
}

Diagram replace_vertex(const Diagram& g, int node, Replacement r) {
  std::vector<int> newid;
  return replace_tracked(g, node, r, newid);
}

bool same_component_at(const Diagram& g, int node) {
  PortIndex idx(g);
  auto info = trace_components(g);
  return info.arc_component[idx.at[node][0].arc] == info.arc_component[idx.at[node][1].arc];
}

FormalSum resolve_vertices(const Diagram& g, const ResolutionScheme& s, const std::vector<int>& order) {
  for (auto k : g.nodes)
    if (k == NodeKind::CVert) throw Error("marked vertex present; use eval_with_casimir_marks");
  return resolve_with(g, order, [&](NodeKind) { return Weights{s.a, s.b, s.c}; });
}

RationalFunc eval_sum(const FormalSum& s, Level level) {
  std::vector<LaurentPoly> values(s.terms.size());
  parallel_for(static_cast<int>(s.terms.size()), [&](int i) {
    const Diagram& d = s.terms[i].diagram;
    values[i] = level == Level::P ? p_eval(d) : z_eval(d);
  });
  RationalFunc total(0);
  for (std::size_t i = 0; i < values.size(); ++i) total += s.terms[i].coeff * RationalFunc(values[i]);
  return total;
}

RationalFunc eval_graph(const Diagram& g, const ResolutionScheme& s, Level level) {
  return eval_sum(resolve_vertices(g, s, {}), level);
}

RationalFunc eval_with_casimir_marks(const Diagram& g, bool normalized) {
  static const ResolutionScheme plain = ResolutionScheme::casimir_plain();
  static const ResolutionScheme marked = ResolutionScheme::casimir_marked();
  FormalSum s = resolve_with(g, {}, [&](NodeKind k) {
    const ResolutionScheme& r = k == NodeKind::CVert ? marked : plain;
    return Weights{r.a, r.b, r.c};
  });
  RationalFunc f = eval_sum(s, Level::Z);
  if (normalized) f *= Apow(-3 * writhe(g));
  return f;
}

RationalFunc loop_t() { return RationalFunc(A(2) + A(-2)); }
RationalFunc vertex_C1() { return RationalFunc(Rational(-1, 2)) * RationalFunc(A(2) - A(-2)) * (loop_t() + 1); }
RationalFunc vertex_C2() { return RationalFunc(2) * RationalFunc(A(2) - A(-2)) * (loop_t() - 1); }
RationalFunc sixgraph_a() { return RationalFunc(LaurentPoly(Rational(1, 2)) * (A(-2) + A(-4))); }
RationalFunc sixgraph_b() { return RationalFunc(LaurentPoly(2) * (A(-2) - A(-4))); }
RationalFunc sixgraph_c() { return RationalFunc(LaurentPoly(Rational(1, 2)) * (A(2) + A(4))); }
RationalFunc sixgraph_d() { return RationalFunc(LaurentPoly(-2) * (A(4) - A(2))); }
Rational fierz_unfold_coeff() { return Rational(1, 2); }
Rational fierz_plain_coeff() { return Rational(-1, 4); }

namespace {

int single_plain_vertex(const Diagram& g) {
  int v = -1, count = 0;
  for (int n = 0; n < g.node_count(); ++n) {
    if (g.nodes[n] == NodeKind::CVert) throw Error("marked vertex present");
    if (g.nodes[n] == NodeKind::Vert) {
      v = n;
      ++count;
    }
  }
  if (count != 1) throw Error("expected exactly one vertex, found " + std::to_string(count));
  return v;
}

}  // namespace

CasimirDecomposition casimir_decompose(const Diagram& g) {
  int v = single_plain_vertex(g);
  CasimirDecomposition r;
  r.report.name = "casimir decomposition of " + g.name;
  RationalFunc t = loop_t();
  RationalFunc alpha_w = Apow(-3 * writhe(g));
  RationalFunc e1m = RationalFunc(A(2) - A(-2));

  r.lhs = eval_graph(g, ResolutionScheme::vassiliev(), Level::P);
  r.plain = eval_with_casimir_marks(g);
  Diagram gm = g;
  gm.nodes[v] = NodeKind::CVert;
  r.marked = eval_with_casimir_marks(gm);
  r.rhs = alpha_w * (t - 1) * e1m * (RationalFunc(2) * r.marked - RationalFunc(Rational(1, 2)) * (t + 1) / (t - 1) * r.plain);
  r.difference = r.lhs - r.rhs;
  r.report.add("lhs " + r.lhs.to_string());
  r.report.add("rhs " + r.rhs.to_string());
  r.report.check(r.difference.is_zero(), "difference " + r.difference.to_string());

  r.f_pos = RationalFunc(z_eval(replace_vertex(g, v, Replacement::Pos)));
  r.f_neg = RationalFunc(z_eval(replace_vertex(g, v, Replacement::Neg)));
  RationalFunc half_sum = RationalFunc(Rational(1, 2)) * RationalFunc(A(1) + A(-1)) * r.plain;
  RationalFunc twice_diff = RationalFunc(2) * RationalFunc(A(1) - A(-1)) * r.marked;
  r.f_pos_rebuilt = half_sum + twice_diff;
  r.f_neg_rebuilt = half_sum - twice_diff;
  r.report.check(r.f_pos_rebuilt == r.f_pos, "F+ from plain and marked: " + r.f_pos_rebuilt.to_string());
  r.report.check(r.f_neg_rebuilt == r.f_neg, "F- from plain and marked: " + r.f_neg_rebuilt.to_string());

  RationalFunc C1 = vertex_C1(), C2 = vertex_C2();
  r.report.check(C1 == sixgraph_a() - sixgraph_c(), "C1 = a - c = " + C1.to_string());
  r.report.check(C2 == sixgraph_b() - sixgraph_d(), "C2 = b - d = " + C2.to_string());
  RationalFunc vertex_op = C1 * r.plain + C2 * r.marked;
  r.report.check(vertex_op == Apow(-3) * r.f_pos - Apow(3) * r.f_neg, "C1 F(plain) + C2 F(marked) = A^-3 F+ - A^3 F-");

  r.lhs_series = series_at_exp(r.lhs, 1);
  Rational plain0 = series_at_exp(r.plain, 0)[0];
  Rational marked0 = series_at_exp(r.marked, 0)[0];
  r.leading_formula = 8 * (marked0 - Rational(3, 4) * plain0);
  r.report.check(r.lhs_series[0] == 0, "h^0 coefficient vanishes");
  r.report.check(r.lhs_series[1] == r.leading_formula,
                 "h^1 coefficient " + to_string(r.lhs_series[1]) + " = 8 (F(marked) - 3/4 F(plain)) at h = 0");
  r.report.ok = r.report.ok && r.difference.is_zero();
  return r;
}

SpinorCheck check_spinor(const Diagram& g, int vertex) {
  require_valid(g);
  SpinorCheck r;
  if (vertex < 0) {
    for (int n = 0; n < g.node_count() && vertex < 0; ++n)
      if (g.nodes[n] == NodeKind::Vert) vertex = n;
    if (vertex < 0) throw Error("no plain vertex in " + g.name);
  }
  if (vertex >= g.node_count() || g.nodes[vertex] != NodeKind::Vert)
    throw Error("node " + std::to_string(vertex) + " is not a plain vertex");
  r.vertex = vertex;
  r.case_no = same_component_at(g, vertex) ? 1 : 2;
  r.vertex_value = eval_with_casimir_marks(g);
  r.unfold_value = eval_with_casimir_marks(replace_vertex(g, vertex, Replacement::Unfold));
  std::vector<int> newid;
  Diagram rev = replace_tracked(g, vertex, Replacement::Reversed, newid);
  r.reversed_value = eval_with_casimir_marks(rev);
  // a marked vertex with one strand reversed keeps its geometric crossings
  // only with the opposite sign
  for (int n = 0; n < g.node_count(); ++n)
    if (g.nodes[n] == NodeKind::CVert &&
        replace_vertex(g, n, Replacement::Pos).nodes[n] != replace_vertex(rev, newid[n], Replacement::Pos).nodes[newid[n]])
      r.reversed_value = -r.reversed_value;
  RationalFunc split = r.case_no == 1 ? r.unfold_value - r.reversed_value : r.unfold_value + r.reversed_value;
  r.residual = r.vertex_value - split;
  r.report.name = "spinor identity at vertex " + std::to_string(vertex) + " of " + g.name;
  r.report.add("case " + std::to_string(r.case_no));
  r.report.add("F(vertex) " + r.vertex_value.to_string());
  r.report.add("F(unfold) " + r.unfold_value.to_string());
  r.report.add("F(reversed unfold) " + r.reversed_value.to_string());
  r.report.check(r.residual.is_zero(), "residual " + r.residual.to_string());
  return r;
}

FourTerm check_four_term(const Diagram& n, const Diagram& s, const Diagram& e, const Diagram& w) {
  FourTerm r;
  auto v = ResolutionScheme::vassiliev();
  r.n = eval_graph(n, v);
  r.s = eval_graph(s, v);
  r.e = eval_graph(e, v);
  r.w = eval_graph(w, v);
  r.residual = r.n - r.s + r.e - r.w;
  return r;
}

SixValent six_valent_eval(const Diagram& n, const Diagram& s, const Diagram& e, const Diagram& w) {
  FourTerm f = check_four_term(n, s, e, w);
  SixValent r;
  r.route1 = f.n - f.s;
  r.route2 = f.w - f.e;
  r.agree = r.route1 == r.route2;
  return r;
}

ResolutionScheme random_scheme(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> q(1, 6), e(-3, 3);
  auto w = [&] {
    int k = q(rng);
    return RationalFunc(LaurentPoly::monomial(e(rng), Rational(k % 2 ? k : -k) / (1 + k / 3)));
  };
  ResolutionScheme s;
  s.a = w();
  s.b = w();
  s.c = w();
  return s;
}

Report check_reidemeister(const Diagram& g, int trials, int steps, std::uint64_t seed) {
  require_valid(g);
  Report r;
  r.name = "move invariance of " + g.name;
  std::mt19937_64 rng(seed);
  bool marked = false, graph = false;
  for (auto k : g.nodes) {
    marked = marked || k == NodeKind::CVert;
    graph = graph || is_vertex(k);
  }
  std::vector<std::function<RationalFunc(const Diagram&)>> evals;
  std::vector<std::string> labels;
  if (marked) {
    evals.push_back([](const Diagram& d) { return eval_with_casimir_marks(d, true); });
    labels.push_back("marked");
  } else if (graph) {
    for (auto [s, l] : {std::pair{ResolutionScheme::vassiliev(), "vassiliev"},
                        std::pair{ResolutionScheme::casimir_plain(), "casimir"},
                        std::pair{random_scheme(rng), "random"}}) {
      evals.push_back([s](const Diagram& d) { return eval_graph(d, s); });
      labels.push_back(l);
    }
  } else {
    evals.push_back([](const Diagram& d) { return RationalFunc(p_eval(d)); });
    labels.push_back("p_eval");
  }
  std::vector<RationalFunc> base;
  for (const auto& f : evals) base.push_back(f(g));
  int good = 0;
  for (int t = 0; t < trials; ++t) {
    Diagram d = g;
    std::string path;
    for (int k = 0; k < steps; ++k) {
      auto m = random_move(d, rng, graph);
      if (!m) break;
      d = apply_move(d, *m);
      path += (path.empty() ? "" : ", ") + to_string(*m);
    }
    bool ok = true;
    for (std::size_t i = 0; i < evals.size(); ++i)
      if (evals[i](d) != base[i]) {
        ok = false;
        r.check(false, "trial " + std::to_string(t) + " " + labels[i] + " after " + path);
      }
    good += ok;
  }
  r.check(good == trials, std::to_string(good) + "/" + std::to_string(trials) + " trials invariant");
  return r;
}

Prop31 derive_prop31() {
  Prop31 r;
  r.report.name = "vertex weights a1, a2";
  auto z = [](const Diagram& d) { return RationalFunc(z_eval(d)); };
  RationalFunc t = loop_t();

  Diagram ga = named_diagram("G_a_vertex");
  int va = single_plain_vertex(ga);
  RationalFunc ref = z(replace_vertex(ga, va, Replacement::Reversed));
  RationalFunc z_ap = z(replace_vertex(ga, va, Replacement::Pos));
  RationalFunc z_an = z(replace_vertex(ga, va, Replacement::Neg));
  RationalFunc z_ab = z(replace_vertex(ga, va, Replacement::Unfold));
  RationalFunc z_aa = same_component_at(ga, va) ? z_ab - ref : z_ab + ref;

  Diagram gb = named_diagram("G_b_vertex");
  int vb = single_plain_vertex(gb);
  RationalFunc z_bb = z(replace_vertex(gb, vb, Replacement::Pos));
  RationalFunc z_bc = z(replace_vertex(gb, vb, Replacement::Neg));
  RationalFunc z_bd = z(replace_vertex(gb, vb, Replacement::Unfold));
  RationalFunc z_be = z(replace_vertex(gb, vb, Replacement::Reversed));
  RationalFunc z_ba = same_component_at(gb, vb) ? z_bd - z_be : z_bd + z_be;

  r.report.check(ref == RationalFunc(z_eval(named_diagram("two-circles"))), "G_a reference = two circles: " + ref.to_string());
  r.report.check(z_ab == t * ref, "G_a unfold = (A^2 + A^-2) ref");
  r.report.check(z_aa == (t - 1) * ref, "G_a vertex = (A^2 + A^-2 - 1) ref: " + z_aa.to_string());
  r.report.check(z_bb == RationalFunc(A(4) + A(-4)), "G_b positive: " + z_bb.to_string());
  r.report.check(z_bc == RationalFunc(A(2) + A(-2)), "G_b negative: " + z_bc.to_string());
  r.report.check(z_ba == RationalFunc(A(3) + A(-3)), "G_b vertex: " + z_ba.to_string());
  r.report.check(z_bd == RationalFunc(A(3)), "G_b unfold: " + z_bd.to_string());

  // x = a2 - a1/4, y = a1/2:
  //   x Z_aa + y Z_ab = A Z_ap + A^-1 Z_an
  //   x Z_ba + y Z_bd = A Z_bb + A^-1 Z_bc
  RationalFunc r1 = Apow(1) * z_ap + Apow(-1) * z_an;
  RationalFunc r2 = Apow(1) * z_bb + Apow(-1) * z_bc;
  RationalFunc det = z_aa * z_bd - z_ab * z_ba;
  if (det.is_zero()) throw Error("singular system for a1, a2");
  RationalFunc x = (r1 * z_bd - z_ab * r2) / det;
  RationalFunc y = (z_aa * r2 - r1 * z_ba) / det;
  r.a1 = RationalFunc(2) * y;
  r.a2 = x + y / RationalFunc(2);

  RationalFunc expected_a1 = RationalFunc(2) * (t - 2);
  RationalFunc coef = RationalFunc(A(4) + A(-4)) / (t - 1) - RationalFunc(Rational(1, 4)) * (t + 1) / (t - 1) * r.a1;
  r.report.check(r.a1 == expected_a1, "a1 = " + r.a1.to_string());
  r.report.check(r.a2 == coef, "a2 = " + r.a2.to_string());
  // with Z(vertex) = (Z+ + Z-)/(A + A^-1) and the skein value of the unfold,
  // A Z+ + A^-1 Z- must be reproduced coefficientwise
  RationalFunc pv = x / RationalFunc(A(1) + A(-1));
  RationalFunc uf = y / RationalFunc(A(2) - A(-2));
  r.report.check(pv + uf * Apow(1) == Apow(1), "coefficient of Z+ reproduces A");
  r.report.check(pv - uf * Apow(-1) == Apow(-1), "coefficient of Z- reproduces A^-1");
  r.report.add("a2 - a1/4 = " + x.to_string() + ", a1/2 = " + y.to_string());
  return r;
}

}  // namespace kg
