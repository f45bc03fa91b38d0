#include <algorithm>
#include <functional>
#include <map>

#include "kg/diagram.hpp"

namespace kg {

// Strands run upward. A letter on generator i joins positions i-1 and i:
// the left strand enters at port 0 and leaves at 2, the right one enters at
// 1 and leaves at 3, so XPos is a positive crossing.
Diagram braid_closure(const std::string& name, int strands, const std::vector<BraidLetter>& word) {
  Diagram d;
  d.name = name;
  std::vector<Port> top(strands), bottom(strands);
  std::vector<bool> touched(strands, false);
  for (const auto& l : word) {
    int i = l.gen - 1;
    if (i < 0 || i + 1 >= strands) throw Error("braid generator out of range in " + name);
    int n = d.node_count();
    d.nodes.push_back(l.kind);
    for (int k = 0; k < 2; ++k) {
      Port in{n, k};
      if (touched[i + k]) d.arcs.push_back({top[i + k], in});
      else bottom[i + k] = in;
      touched[i + k] = true;
    }
    top[i] = {n, 3};
    top[i + 1] = {n, 2};
  }
  for (int i = 0; i < strands; ++i) {
    if (touched[i]) d.arcs.push_back({top[i], bottom[i]});
    else ++d.free_loops;
  }
  return d;
}

namespace {

constexpr NodeKind P = NodeKind::XPos, N = NodeKind::XNeg, V = NodeKind::Vert, C = NodeKind::CVert;

std::vector<BraidLetter> repeat(const std::vector<BraidLetter>& w, int times) {
  std::vector<BraidLetter> r;
  for (int k = 0; k < times; ++k) r.insert(r.end(), w.begin(), w.end());
  return r;
}

Diagram with_loops(Diagram d, int extra) {
  d.free_loops += extra;
  return d;
}

Diagram renamed(Diagram d, const std::string& name) {
  d.name = name;
  return d;
}

// Four-term configuration around a triangle of the base: w becomes the
// double point D, the chord uv is the moving strand.
Diagram quad_member(const Diagram& base, const std::string& which, const std::string& name) {
  auto tris = find_triangles(base);
  if (tris.empty()) throw Error("no triangle in four-term base " + base.name);
  Triangle t = tris.front();
  auto [u, v, w] = t.nodes;
  auto port = [&](int arc, int node) {
    const Arc& a = base.arcs[arc];
    return a.from.node == node ? a.from.slot : a.to.slot;
  };
  auto over_kind = [](int slot) { return slot % 2 == 0 ? NodeKind::XPos : NodeKind::XNeg; };
  NodeKind c_over_u = over_kind(port(t.arcs[0], u));
  NodeKind c_over_v = over_kind(port(t.arcs[0], v));

  Diagram north = base, east = base;
  north.nodes[w] = east.nodes[w] = NodeKind::Vert;
  north.nodes[u] = NodeKind::Vert;
  north.nodes[v] = c_over_v;
  east.nodes[u] = flip_kind(c_over_u);
  east.nodes[v] = NodeKind::Vert;

  Diagram probe = base;
  probe.nodes[u] = c_over_u;
  probe.nodes[v] = c_over_v;
  bool same_sign = crossing_sign(probe, u) == crossing_sign(probe, v);

  Diagram r;
  if (which == "N") r = north;
  else if (which == "S") r = slide_triangle(north, t);
  else if (which == "E") r = same_sign ? east : slide_triangle(east, t);
  else if (which == "W") r = same_sign ? slide_triangle(east, t) : east;
  else throw Error("unknown quadruple member " + which);
  r.name = name;
  return r;
}

using Builder = std::function<Diagram(const std::string&)>;

const std::map<std::string, Builder>& registry() {
  static const std::map<std::string, Builder> reg = [] {
    std::map<std::string, Builder> m;
    auto braid = [&m](const std::string& name, int strands, std::vector<BraidLetter> w) {
      m[name] = [strands, w](const std::string& n) { return braid_closure(n, strands, w); };
    };
    m["unknot"] = [](const std::string& n) { return with_loops(Diagram{n, {}, {}, 0}, 1); };
    m["two-circles"] = [](const std::string& n) { return with_loops(Diagram{n, {}, {}, 0}, 2); };
    braid("kink+", 2, {{P, 1}});
    braid("kink-", 2, {{N, 1}});
    braid("unknot-3-kinks", 4, {{P, 1}, {P, 2}, {N, 3}});
    braid("hopf+", 2, {{P, 1}, {P, 1}});
    braid("hopf-", 2, {{N, 1}, {N, 1}});
    braid("trefoil+", 2, repeat({{P, 1}}, 3));
    braid("trefoil-", 2, repeat({{N, 1}}, 3));
    braid("trefoil+stab", 3, {{P, 1}, {P, 1}, {P, 1}, {P, 2}});
    braid("trefoil+conj", 3, {{P, 2}, {P, 1}, {P, 1}, {P, 1}, {P, 2}, {N, 2}});
    braid("figure-eight", 3, repeat({{P, 1}, {N, 2}}, 2));
    braid("solomon", 2, repeat({{P, 1}}, 4));
    braid("cinquefoil", 2, repeat({{P, 1}}, 5));
    braid("borromean", 3, repeat({{P, 1}, {N, 2}}, 3));
    braid("torus-3-4", 3, repeat({{P, 1}, {P, 2}}, 4));
    braid("torus-3-5", 3, repeat({{P, 1}, {P, 2}}, 5));
    braid("pretzel-4", 4, {{P, 1}, {N, 2}, {P, 3}, {N, 2}, {P, 1}, {N, 3}, {P, 2}});

    // one loop whose two lobes meet at the double point, plus a separate
    // circle so the reversed unfold is two circles
    m["G_a_vertex"] = [](const std::string& n) { return with_loops(braid_closure(n, 2, {{V, 1}}), 1); };
    m["G_a_cvert"] = [](const std::string& n) { return with_loops(braid_closure(n, 2, {{C, 1}}), 1); };
    m["G_a_pos"] = [](const std::string& n) { return with_loops(braid_closure(n, 2, {{P, 1}}), 1); };
    m["G_a_neg"] = [](const std::string& n) { return with_loops(braid_closure(n, 2, {{N, 1}}), 1); };
    // two circles sharing one double point, clasped once more
    braid("G_b_vertex", 2, {{V, 1}, {P, 1}});
    braid("G_b_cvert", 2, {{C, 1}, {P, 1}});
    braid("G_b_pos", 2, {{P, 1}, {P, 1}});
    braid("G_b_neg", 2, {{N, 1}, {P, 1}});

    // one component through the vertex twice, or two components
    braid("case1-trefoil", 2, {{V, 1}, {P, 1}, {P, 1}});
    braid("case1-figure-eight", 3, {{V, 1}, {N, 2}, {P, 1}, {N, 2}});
    braid("case1-torus-3-4", 3, {{V, 1}, {P, 2}, {P, 1}, {P, 2}, {P, 1}, {P, 2}, {P, 1}, {P, 2}});
    braid("case2-solomon", 2, {{V, 1}, {P, 1}, {P, 1}, {P, 1}});
    braid("case2-borromean", 3, {{V, 1}, {N, 2}, {P, 1}, {N, 2}, {P, 1}, {N, 2}});
    braid("case1-twisted-3", 3, {{V, 1}, {P, 1}, {N, 2}, {P, 1}, {N, 2}, {N, 2}});
    braid("case2-torus-2-6", 2, {{V, 1}, {P, 1}, {P, 1}, {P, 1}, {P, 1}, {P, 1}});
    braid("case1-cvert-trefoil", 2, {{C, 1}, {P, 1}, {P, 1}});
    braid("case2-cvert-solomon", 2, {{C, 1}, {P, 1}, {P, 1}, {P, 1}});

    // two and three double points
    braid("hopf-vv", 2, {{V, 1}, {V, 1}});
    braid("trefoil-vv", 2, {{V, 1}, {P, 1}, {V, 1}});
    braid("solomon-vv", 2, {{V, 1}, {P, 1}, {V, 1}, {P, 1}});
    braid("figure-eight-vv", 3, {{V, 1}, {N, 2}, {V, 1}, {N, 2}});
    braid("borromean-vv", 3, {{V, 1}, {N, 2}, {P, 1}, {V, 2}, {P, 1}, {N, 2}});
    braid("trefoil-vc", 2, {{V, 1}, {C, 1}, {P, 1}});
    braid("trefoil-vvv", 2, repeat({{V, 1}}, 3));
    braid("cinquefoil-vvv", 2, {{V, 1}, {P, 1}, {V, 1}, {P, 1}, {V, 1}});
    braid("borromean-vvv", 3, {{V, 1}, {N, 2}, {V, 1}, {N, 2}, {V, 1}, {N, 2}});
    braid("torus-3-4-vvv", 3, {{V, 1}, {P, 2}, {P, 1}, {V, 2}, {P, 1}, {P, 2}, {V, 1}, {P, 2}});

    // four-term quadruples around a triple point; bases carry a triangle
    const std::map<std::string, std::pair<int, std::vector<BraidLetter>>> bases = {
        {"ft-quad-1", {3, {{P, 1}, {P, 2}, {P, 1}}}},
        {"ft-quad-2", {3, {{P, 1}, {P, 2}, {P, 1}, {P, 2}, {P, 2}}}},
        {"ft-quad-3", {3, {{P, 1}, {P, 2}, {P, 1}, {N, 2}, {P, 1}, {N, 2}}}},
        {"ft-quad-4", {3, {{N, 1}, {N, 2}, {N, 1}, {V, 2}, {P, 1}}}},
        {"ft-quad-5", {4, {{P, 1}, {P, 2}, {P, 1}, {P, 3}, {N, 2}, {P, 3}}}},
    };
    for (const auto& [qname, spec] : bases) {
      auto [strands, word] = spec;
      std::string base_name = qname + "/base";
      m[base_name] = [strands, word](const std::string& n) { return braid_closure(n, strands, word); };
      for (std::string which : {"N", "S", "E", "W"}) {
        m[qname + "/" + which] = [strands, word, which](const std::string& n) {
          return quad_member(braid_closure(n, strands, word), which, n);
        };
      }
    }
    return m;
  }();
  return reg;
}

}  // namespace

Diagram named_diagram(const std::string& name) {
  const auto& reg = registry();
  auto it = reg.find(name);
  if (it == reg.end()) throw Error("unknown diagram name '" + name + "'");
  return renamed(it->second(name), name);
}

std::vector<std::string> named_diagram_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : registry()) out.push_back(k);
  return out;
}

}  // namespace kg
