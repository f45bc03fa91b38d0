#include <algorithm>
#include <map>
#include <set>

#include "kg/diagram.hpp"

namespace kg {

const char* move_name(Move m) {
  switch (m) {
    case Move::R1Pos: return "R1+";
    case Move::R1Neg: return "R1-";
    case Move::R2: return "R2";
    case Move::R3: return "R3";
    case Move::R4: return "R4";
    case Move::R5: return "R5";
  }
  return "?";
}

std::string to_string(const MoveSpec& m) {
  std::string s = move_name(m.move);
  if (m.inverse) s += " inverse";
  auto list = [](const std::vector<int>& v) {
    std::string r;
    for (int x : v) r += (r.empty() ? "" : ",") + std::to_string(x);
    return r;
  };
  if (!m.arcs.empty()) s += " arcs=" + list(m.arcs);
  if (!m.nodes.empty()) s += " nodes=" + list(m.nodes);
  s += " variant=" + std::to_string(m.variant);
  if (m.move == Move::R5) s += " base=" + std::to_string(m.base);
  return s;
}

namespace {

int mod4(int x) { return ((x % 4) + 4) % 4; }

[[noreturn]] void mismatch(const MoveSpec& m, const std::string& why) {
  throw PatternMismatch(to_string(m) + ": " + why);
}

struct Pass {
  int node, in, out;
};

// Threads the passes, in order, onto an arc (or onto a consumed free loop).
void insert_passes(Diagram& d, int arc, const std::vector<Pass>& passes) {
  std::vector<Arc> chain;
  for (std::size_t k = 0; k + 1 < passes.size(); ++k)
    chain.push_back({{passes[k].node, passes[k].out}, {passes[k + 1].node, passes[k + 1].in}});
  Port first{passes.front().node, passes.front().in};
  Port last{passes.back().node, passes.back().out};
  if (arc < 0) {
    --d.free_loops;
    chain.push_back({last, first});
    d.arcs.insert(d.arcs.end(), chain.begin(), chain.end());
    return;
  }
  Arc old = d.arcs[arc];
  d.arcs[arc] = {old.from, first};
  d.arcs.insert(d.arcs.end(), chain.begin(), chain.end());
  d.arcs.push_back({last, old.to});
}

// Removes nodes, letting each strand pass straight through.
Diagram splice_out(const Diagram& d, const std::vector<int>& remove) {
  PortIndex idx(d);
  std::vector<bool> gone(d.nodes.size(), false);
  for (int n : remove) gone[n] = true;
  std::vector<int> newid(d.nodes.size(), -1);
  Diagram r;
  r.name = d.name;
  r.free_loops = d.free_loops;
  for (int n = 0; n < d.node_count(); ++n)
    if (!gone[n]) {
      newid[n] = r.node_count();
      r.nodes.push_back(d.nodes[n]);
    }
  std::vector<bool> used(d.arcs.size(), false);
  for (int a = 0; a < d.arc_count(); ++a) {
    if (used[a] || gone[d.arcs[a].from.node]) continue;
    int cur = a;
    used[cur] = true;
    while (gone[d.arcs[cur].to.node]) {
      Port h = d.arcs[cur].to;
      cur = idx.at[h.node][mod4(h.slot + 2)].arc;
      used[cur] = true;
    }
    Port f = d.arcs[a].from, t = d.arcs[cur].to;
    r.arcs.push_back({{newid[f.node], f.slot}, {newid[t.node], t.slot}});
  }
  for (int a = 0; a < d.arc_count(); ++a) {
    if (used[a]) continue;
    int cur = a;
    while (!used[cur]) {
      used[cur] = true;
      Port h = d.arcs[cur].to;
      cur = idx.at[h.node][mod4(h.slot + 2)].arc;
    }
    ++r.free_loops;
  }
  return r;
}

Diagram remap_ports(const Diagram& d, const std::map<Port, Port>& m) {
  Diagram r = d;
  for (auto& a : r.arcs) {
    if (auto it = m.find(a.from); it != m.end()) a.from = it->second;
    if (auto it = m.find(a.to); it != m.end()) a.to = it->second;
  }
  return r;
}

int port_of(const Diagram& d, int arc, int node) {
  const Arc& a = d.arcs[arc];
  if (a.from.node == node) return a.from.slot;
  if (a.to.node == node) return a.to.slot;
  return -1;
}

bool joins(const Diagram& d, int arc, int x, int y) {
  const Arc& a = d.arcs[arc];
  return (a.from.node == x && a.to.node == y) || (a.from.node == y && a.to.node == x);
}

// Turning sign of a triangular face, 0 if the triangle is not a face.
int triangle_turn(const Diagram& d, const Triangle& t) {
  auto [u, v, w] = t.nodes;
  auto [euv, evw, ewu] = t.arcs;
  if (u == v || v == w || w == u) return 0;
  for (int e : t.arcs)
    if (e < 0 || e >= d.arc_count()) return 0;
  if (!joins(d, euv, u, v) || !joins(d, evw, v, w) || !joins(d, ewu, w, u)) return 0;
  int pu1 = port_of(d, euv, u), pv1 = port_of(d, euv, v);
  int pv2 = port_of(d, evw, v), pw2 = port_of(d, evw, w);
  int pw3 = port_of(d, ewu, w), pu3 = port_of(d, ewu, u);
  for (int s : {1, -1})
    if (pv2 == mod4(pv1 + s) && pw3 == mod4(pw2 + s) && pu1 == mod4(pu3 + s)) return s;
  return 0;
}

// whether chord (x,y) through arc e is over at node x
bool chord_over(const Diagram& d, int e, int x) { return over_port(d.nodes[x], port_of(d, e, x)); }

bool r3_ok(const Diagram& d, const Triangle& t) {
  auto [u, v, w] = t.nodes;
  for (int n : t.nodes)
    if (!is_crossing(d.nodes[n])) return false;
  bool ou = chord_over(d, t.arcs[0], u);
  bool ov = chord_over(d, t.arcs[1], v);
  bool ow = chord_over(d, t.arcs[2], w);
  return !(ou == ov && ov == ow);
}

bool r4_ok(const Diagram& d, const Triangle& t) {
  auto [u, v, w] = t.nodes;
  if (!is_vertex(d.nodes[w]) || !is_crossing(d.nodes[u]) || !is_crossing(d.nodes[v])) return false;
  return chord_over(d, t.arcs[0], u) == chord_over(d, t.arcs[0], v);
}

struct BigonR5 {
  int x_u = -1, x_w = -1;
};

bool r5_site(const Diagram& d, const PortIndex& idx, int V, int p, int X, BigonR5& b) {
  if (V == X || !is_vertex(d.nodes[V]) || !is_crossing(d.nodes[X])) return false;
  Port tu = idx.across(d, {V, mod4(p + 2)});
  Port tw = idx.across(d, {V, mod4(p + 3)});
  if (tu.node != X || tw.node != X) return false;
  if (tu.slot != mod4(tw.slot + 1)) return false;
  b = {tu.slot, tw.slot};
  return true;
}

// Two crossings joined by a bigon whose e1 side is over at both ends.
bool r2_bigon(const Diagram& d, int n1, int n2, int e1, int e2) {
  if (n1 == n2 || e1 == e2 || !is_crossing(d.nodes[n1]) || !is_crossing(d.nodes[n2])) return false;
  if (!joins(d, e1, n1, n2) || !joins(d, e2, n1, n2)) return false;
  int a1 = port_of(d, e1, n1), a2 = port_of(d, e1, n2);
  int b1 = port_of(d, e2, n1), b2 = port_of(d, e2, n2);
  int s = mod4(b2 - a2);
  if (s != 1 && s != 3) return false;
  if (mod4(a1 - b1) != s) return false;
  return over_port(d.nodes[n1], a1) && over_port(d.nodes[n2], a2);
}

bool has_kink(const Diagram& d, const PortIndex& idx, int n) {
  for (int s = 0; s < 4; ++s) {
    const auto& sl = idx.at[n][s];
    if (!sl.out) continue;
    Port t = d.arcs[sl.arc].to;
    if (t.node == n && (mod4(t.slot - s) == 1 || mod4(t.slot - s) == 3)) return true;
  }
  return false;
}

}  // namespace

Diagram slide_triangle(const Diagram& d, const Triangle& t) {
  std::map<Port, Port> m;
  for (int k = 0; k < 3; ++k) {
    int x = t.nodes[k], y = t.nodes[(k + 1) % 3], e = t.arcs[k];
    int px = port_of(d, e, x), py = port_of(d, e, y);
    int ox = mod4(px + 2), oy = mod4(py + 2);
    m[{x, px}] = {y, oy};
    m[{y, py}] = {x, ox};
    m[{x, ox}] = {y, py};
    m[{y, oy}] = {x, px};
  }
  return remap_ports(d, m);
}

MoveResult apply_move_ex(const Diagram& d, const MoveSpec& m) {
  require_valid(d);
  MoveResult res;
  res.undo = m;
  auto arc_ok = [&](int a) { return (a == -1 && d.free_loops > 0) || (a >= 0 && a < d.arc_count()); };
  auto node_ok = [&](int n) { return n >= 0 && n < d.node_count(); };

  switch (m.move) {
    case Move::R1Pos:
    case Move::R1Neg: {
      NodeKind k = m.move == Move::R1Pos ? NodeKind::XPos : NodeKind::XNeg;
      if (!m.inverse) {
        if (m.arcs.size() != 1 || !arc_ok(m.arcs[0])) mismatch(m, "needs one arc or free loop");
        Diagram r = d;
        int n = r.node_count();
        r.nodes.push_back(k);
        if (m.variant == 0) insert_passes(r, m.arcs[0], {{n, 0, 2}, {n, 1, 3}});
        else insert_passes(r, m.arcs[0], {{n, 1, 3}, {n, 0, 2}});
        res.diagram = std::move(r);
        res.undo = MoveSpec{m.move, true, {}, {n}, 0, 0};
        return res;
      }
      if (m.nodes.size() != 1 || !node_ok(m.nodes[0])) mismatch(m, "needs one node");
      int n = m.nodes[0];
      PortIndex idx(d);
      if (!is_crossing(d.nodes[n]) || !has_kink(d, idx, n)) mismatch(m, "node is not a kink");
      int want = m.move == Move::R1Pos ? 1 : -1;
      if (crossing_sign(d, n) != want) mismatch(m, "kink has the other sign");
      res.diagram = splice_out(d, {n});
      res.undo.reset();
      return res;
    }
    case Move::R2: {
      if (!m.inverse) {
        if (m.arcs.size() != 2 || !arc_ok(m.arcs[0]) || !arc_ok(m.arcs[1])) mismatch(m, "needs two arcs");
        if (m.arcs[0] == m.arcs[1] && (m.arcs[0] >= 0 || d.free_loops < 2)) mismatch(m, "arcs must differ");
        Diagram r = d;
        int n1 = r.node_count(), n2 = n1 + 1;
        r.nodes.push_back(NodeKind::XPos);
        r.nodes.push_back(NodeKind::XNeg);
        bool anti = m.variant & 1, side = m.variant & 2;
        auto sl = [&](int s) { return side && s % 2 == 1 ? 4 - s : s; };
        std::vector<Pass> x{{n1, 0, sl(2)}, {n2, sl(1), sl(3)}};
        std::vector<Pass> y = anti ? std::vector<Pass>{{n2, sl(2), sl(0)}, {n1, sl(3), sl(1)}}
                                   : std::vector<Pass>{{n1, sl(1), sl(3)}, {n2, sl(0), sl(2)}};
        insert_passes(r, m.arcs[0], x);
        insert_passes(r, m.arcs[1], y);
        res.diagram = std::move(r);
        res.undo = MoveSpec{Move::R2, true, {}, {n1, n2}, 0, 0};
        return res;
      }
      if (m.nodes.size() != 2 || !node_ok(m.nodes[0]) || !node_ok(m.nodes[1])) mismatch(m, "needs two nodes");
      int n1 = m.nodes[0], n2 = m.nodes[1];
      bool found = false;
      for (int e1 = 0; e1 < d.arc_count() && !found; ++e1)
        for (int e2 = 0; e2 < d.arc_count() && !found; ++e2) found = r2_bigon(d, n1, n2, e1, e2);
      if (!found) mismatch(m, "nodes do not form a clasp");
      res.diagram = splice_out(d, {n1, n2});
      res.undo.reset();
      return res;
    }
    case Move::R3:
    case Move::R4: {
      if (m.nodes.size() != 3 || m.arcs.size() != 3) mismatch(m, "needs three nodes and three arcs");
      for (int n : m.nodes)
        if (!node_ok(n)) mismatch(m, "unknown node");
      Triangle t{{m.nodes[0], m.nodes[1], m.nodes[2]}, {m.arcs[0], m.arcs[1], m.arcs[2]}};
      if (triangle_turn(d, t) == 0) mismatch(m, "not a triangular face");
      if (m.move == Move::R3 && !r3_ok(d, t)) mismatch(m, "R3 needs three crossings with a consistent over order");
      if (m.move == Move::R4 && !r4_ok(d, t)) mismatch(m, "R4 needs a vertex and a strand passing over or under it");
      res.diagram = slide_triangle(d, t);
      return res;
    }
    case Move::R5: {
      if (m.nodes.size() != 2) mismatch(m, "needs vertex and crossing");
      int V = m.nodes[0], X = m.nodes[1], p = mod4(m.base);
      if (!node_ok(V) || !node_ok(X)) mismatch(m, "unknown node");
      PortIndex idx(d);
      BigonR5 b;
      if (!r5_site(d, idx, V, p, X, b)) mismatch(m, "no twist next to the vertex");
      std::map<Port, Port> mp;
      mp[{V, p}] = {X, 0};
      mp[{V, mod4(p + 1)}] = {X, 1};
      mp[{V, mod4(p + 2)}] = {X, 2};
      mp[{V, mod4(p + 3)}] = {X, 3};
      mp[{X, b.x_w}] = {V, p};
      mp[{X, b.x_u}] = {V, mod4(p + 1)};
      mp[{X, mod4(b.x_w + 2)}] = {V, mod4(p + 2)};
      mp[{X, mod4(b.x_u + 2)}] = {V, mod4(p + 3)};
      Diagram r = remap_ports(d, mp);
      r.nodes[X] = over_port(d.nodes[X], b.x_w) ? NodeKind::XPos : NodeKind::XNeg;
      res.diagram = std::move(r);
      res.undo = MoveSpec{Move::R5, false, {}, {V, X}, 0, mod4(p + 2)};
      return res;
    }
  }
  mismatch(m, "unknown move");
}

Diagram apply_move(const Diagram& d, const MoveSpec& m) { return apply_move_ex(d, m).diagram; }

std::vector<Triangle> find_triangles(const Diagram& d) {
  PortIndex idx(d);
  std::vector<Triangle> out;
  std::set<std::array<int, 3>> seen;
  for (int e = 0; e < d.arc_count(); ++e) {
    for (int end = 0; end < 2; ++end) {
      Port start = end == 0 ? d.arcs[e].from : d.arcs[e].to;
      for (int s : {1, -1}) {
        Port y = idx.across(d, start);
        Port y2{y.node, mod4(y.slot + s)};
        Port z = idx.across(d, y2);
        Port z2{z.node, mod4(z.slot + s)};
        Port x = idx.across(d, z2);
        if (x.node != start.node || mod4(x.slot + s) != start.slot) continue;
        Triangle t{{start.node, y.node, z.node}, {e, idx[y2].arc, idx[z2].arc}};
        if (triangle_turn(d, t) == 0) continue;
        std::array<int, 3> key = t.arcs;
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) out.push_back(t);
      }
    }
  }
  return out;
}

std::vector<MoveSpec> find_moves(const Diagram& d, Move mv, bool inverse) {
  require_valid(d);
  std::vector<MoveSpec> out;
  PortIndex idx(d);
  switch (mv) {
    case Move::R1Pos:
    case Move::R1Neg: {
      if (!inverse) {
        std::vector<int> sites;
        if (d.free_loops > 0) sites.push_back(-1);
        for (int a = 0; a < d.arc_count(); ++a) sites.push_back(a);
        for (int a : sites)
          for (int v = 0; v < 2; ++v) out.push_back({mv, false, {a}, {}, v, 0});
      } else {
        int want = mv == Move::R1Pos ? 1 : -1;
        for (int n = 0; n < d.node_count(); ++n)
          if (is_crossing(d.nodes[n]) && has_kink(d, idx, n) && crossing_sign(d, n) == want)
            out.push_back({mv, true, {}, {n}, 0, 0});
      }
      break;
    }
    case Move::R2: {
      if (!inverse) {
        // arc pairs sharing a face, plus free loops
        std::set<std::pair<int, int>> pairs;
        std::vector<std::array<bool, 4>> seen(d.nodes.size(), {false, false, false, false});
        for (int n = 0; n < d.node_count(); ++n)
          for (int s = 0; s < 4; ++s) {
            if (seen[n][s]) continue;
            std::vector<int> face;
            Port p{n, s};
            while (!seen[p.node][p.slot]) {
              seen[p.node][p.slot] = true;
              face.push_back(idx[p].arc);
              Port q = idx.across(d, p);
              p = {q.node, mod4(q.slot + 1)};
            }
            for (int a : face)
              for (int b : face)
                if (a != b) pairs.insert({a, b});
          }
        if (d.free_loops > 0)
          for (int a = 0; a < d.arc_count(); ++a) {
            pairs.insert({-1, a});
            pairs.insert({a, -1});
          }
        if (d.free_loops > 1) pairs.insert({-1, -1});
        bool planar = is_planar(d);
        for (auto [a, b] : pairs)
          for (int v = 0; v < 4; ++v) {
            MoveSpec ms{Move::R2, false, {a, b}, {}, v, 0};
            if (!planar || is_planar(apply_move(d, ms))) out.push_back(ms);
          }
      } else {
        for (int n1 = 0; n1 < d.node_count(); ++n1)
          for (int n2 = n1 + 1; n2 < d.node_count(); ++n2) {
            bool ok = false;
            for (int e1 = 0; e1 < d.arc_count() && !ok; ++e1)
              for (int e2 = 0; e2 < d.arc_count() && !ok; ++e2)
                ok = r2_bigon(d, n1, n2, e1, e2) || r2_bigon(d, n2, n1, e1, e2);
            if (ok) out.push_back({Move::R2, true, {}, {n1, n2}, 0, 0});
          }
      }
      break;
    }
    case Move::R3:
    case Move::R4: {
      for (const auto& t0 : find_triangles(d)) {
        for (int rot = 0; rot < 3; ++rot) {
          Triangle t{{t0.nodes[rot], t0.nodes[(rot + 1) % 3], t0.nodes[(rot + 2) % 3]},
                     {t0.arcs[rot], t0.arcs[(rot + 1) % 3], t0.arcs[(rot + 2) % 3]}};
          bool ok = mv == Move::R3 ? (rot == 0 && r3_ok(d, t)) : r4_ok(d, t);
          if (ok) {
            out.push_back({mv, inverse, {t.arcs.begin(), t.arcs.end()}, {t.nodes.begin(), t.nodes.end()}, 0, 0});
            break;
          }
        }
      }
      break;
    }
    case Move::R5: {
      for (int V = 0; V < d.node_count(); ++V)
        for (int p = 0; p < 4; ++p) {
          Port t = idx.across(d, {V, mod4(p + 2)});
          BigonR5 b;
          if (r5_site(d, idx, V, p, t.node, b)) out.push_back({Move::R5, inverse, {}, {V, t.node}, 0, p});
        }
      break;
    }
  }
  return out;
}

std::optional<MoveSpec> random_move(const Diagram& d, std::mt19937_64& rng, bool vertex_moves) {
  std::vector<std::vector<MoveSpec>> kinds;
  auto add = [&](Move m, bool inv) {
    auto sites = find_moves(d, m, inv);
    if (!sites.empty()) kinds.push_back(std::move(sites));
  };
  for (bool inv : {false, true}) {
    add(Move::R1Pos, inv);
    add(Move::R1Neg, inv);
    add(Move::R2, inv);
  }
  add(Move::R3, false);
  if (vertex_moves) {
    add(Move::R4, false);
    add(Move::R5, false);
  }
  if (kinds.empty()) return std::nullopt;
  const auto& pick = kinds[std::uniform_int_distribution<std::size_t>(0, kinds.size() - 1)(rng)];
  return pick[std::uniform_int_distribution<std::size_t>(0, pick.size() - 1)(rng)];
}

}  // namespace kg
