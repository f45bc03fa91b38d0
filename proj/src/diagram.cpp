#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

#include "kg/diagram.hpp"

namespace kg {

const char* kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::XPos: return "XPos";
    case NodeKind::XNeg: return "XNeg";
    case NodeKind::Vert: return "Vert";
    case NodeKind::CVert: return "CVert";
  }
  return "?";
}

NodeKind flip_kind(NodeKind k) {
  if (k == NodeKind::XPos) return NodeKind::XNeg;
  if (k == NodeKind::XNeg) return NodeKind::XPos;
  return k;
}

bool operator==(const Diagram& a, const Diagram& b) {
  if (a.nodes != b.nodes || a.free_loops != b.free_loops || a.arcs.size() != b.arcs.size()) return false;
  auto x = a.arcs, y = b.arcs;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

PortIndex::PortIndex(const Diagram& d) : at(d.nodes.size()) {
  auto bad = [](const std::string& s) { throw InvalidDiagram(s); };
  for (int i = 0; i < d.arc_count(); ++i) {
    for (int end = 0; end < 2; ++end) {
      Port p = end == 0 ? d.arcs[i].from : d.arcs[i].to;
      if (p.node < 0 || p.node >= d.node_count() || p.slot < 0 || p.slot > 3)
        bad("arc " + std::to_string(i) + " has an endpoint outside the diagram");
      Slot& s = at[p.node][p.slot];
      if (s.arc >= 0)
        bad("port " + std::to_string(p.node) + "." + std::to_string(p.slot) + " used twice");
      s.arc = i;
      s.out = end == 0;
    }
  }
  for (int n = 0; n < d.node_count(); ++n)
    for (int s = 0; s < 4; ++s)
      if (at[n][s].arc < 0) bad("port " + std::to_string(n) + "." + std::to_string(s) + " unused");
}

Port PortIndex::across(const Diagram& d, Port p) const {
  const Slot& s = (*this)[p];
  const Arc& a = d.arcs[s.arc];
  return s.out ? a.to : a.from;
}

std::vector<std::string> validate(const Diagram& d) {
  std::vector<std::string> out;
  if (d.free_loops < 0) out.push_back("negative free loop count");
  std::vector<std::array<std::vector<std::pair<int, bool>>, 4>> use(d.nodes.size());
  for (int i = 0; i < d.arc_count(); ++i) {
    for (int end = 0; end < 2; ++end) {
      Port p = end == 0 ? d.arcs[i].from : d.arcs[i].to;
      if (p.node < 0 || p.node >= d.node_count()) {
        out.push_back("arc " + std::to_string(i) + ": unknown node " + std::to_string(p.node));
        continue;
      }
      if (p.slot < 0 || p.slot > 3) {
        out.push_back("arc " + std::to_string(i) + ": port slot " + std::to_string(p.slot) + " out of range");
        continue;
      }
      use[p.node][p.slot].push_back({i, end == 0});
    }
  }
  for (int n = 0; n < d.node_count(); ++n) {
    bool ports_ok = true;
    for (int s = 0; s < 4; ++s) {
      const auto& u = use[n][s];
      std::string port = std::to_string(n) + "." + std::to_string(s);
      if (u.empty()) {
        out.push_back("node " + std::to_string(n) + ": port " + port + " unused");
        ports_ok = false;
      } else if (u.size() > 1) {
        std::string arcs;
        for (auto& [a, o] : u) arcs += (arcs.empty() ? "" : ", ") + std::to_string(a);
        out.push_back("node " + std::to_string(n) + ": duplicate port use at " + port + " (arcs " + arcs + ")");
        ports_ok = false;
      }
    }
    if (!ports_ok) continue;
    for (int s = 0; s < 2; ++s) {
      bool out_a = use[n][s][0].second, out_b = use[n][s + 2][0].second;
      if (out_a == out_b)
        out.push_back("node " + std::to_string(n) + ": orientation through node, strand " + std::to_string(s) + "-" +
                      std::to_string(s + 2) + " has both ports " + (out_a ? "outgoing" : "incoming"));
    }
  }
  return out;
}

void require_valid(const Diagram& d) {
  auto v = validate(d);
  if (!v.empty()) throw InvalidDiagram("invalid diagram " + d.name + ": " + v.front());
}

bool over_port(NodeKind k, int slot) {
  if (k == NodeKind::XPos) return slot % 2 == 0;
  if (k == NodeKind::XNeg) return slot % 2 == 1;
  return false;
}

namespace {

int sign_at(const Diagram& d, const PortIndex& idx, int n) {
  NodeKind k = d.nodes[n];
  if (!is_crossing(k)) return 0;
  int o = k == NodeKind::XPos ? 0 : 1;
  int p = idx.at[n][o].out ? o + 2 : o;
  int q = idx.at[n][o + 1].out ? (o + 3) % 4 : o + 1;
  return q == (p + 1) % 4 ? 1 : -1;
}

}  // namespace

int crossing_sign(const Diagram& d, int node) {
  PortIndex idx(d);
  return sign_at(d, idx, node);
}

int writhe(const Diagram& d) {
  PortIndex idx(d);
  int w = 0;
  for (int n = 0; n < d.node_count(); ++n) w += sign_at(d, idx, n);
  return w;
}

int count_crossings(const Diagram& d) {
  return static_cast<int>(std::count_if(d.nodes.begin(), d.nodes.end(), is_crossing));
}

int count_vertices(const Diagram& d) { return d.node_count() - count_crossings(d); }

ComponentInfo trace_components(const Diagram& d) {
  PortIndex idx(d);
  ComponentInfo info;
  info.arc_component.assign(d.arcs.size(), -1);
  for (int a0 = 0; a0 < d.arc_count(); ++a0) {
    if (info.arc_component[a0] >= 0) continue;
    int c = info.traced++;
    int a = a0;
    while (info.arc_component[a] < 0) {
      info.arc_component[a] = c;
      Port h = d.arcs[a].to;
      a = idx.at[h.node][(h.slot + 2) % 4].arc;
    }
  }
  info.total = info.traced + d.free_loops;
  return info;
}

int components(const Diagram& d) { return trace_components(d).total; }

Diagram reverse_component(const Diagram& d, int component) {
  ComponentInfo info = trace_components(d);
  if (component < 0 || component >= info.total)
    throw Error("unknown component " + std::to_string(component));
  Diagram r = d;
  for (int a = 0; a < d.arc_count(); ++a)
    if (info.arc_component[a] == component) std::swap(r.arcs[a].from, r.arcs[a].to);
  return r;
}

Diagram mirror(const Diagram& d) {
  Diagram r = d;
  for (auto& k : r.nodes) k = flip_kind(k);
  return r;
}

namespace {

struct Faces {
  std::vector<int> piece_of_node;
  int pieces = 0;
  std::vector<int> faces_per_piece;
};

Faces face_census(const Diagram& d) {
  PortIndex idx(d);
  Faces f;
  int n = d.node_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& a : d.arcs) parent[find(a.from.node)] = find(a.to.node);
  f.piece_of_node.assign(n, -1);
  std::vector<int> root_piece(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (root_piece[r] < 0) root_piece[r] = f.pieces++;
    f.piece_of_node[i] = root_piece[r];
  }
  f.faces_per_piece.assign(f.pieces, 0);
  std::vector<std::array<bool, 4>> seen(n, {false, false, false, false});
  for (int i = 0; i < n; ++i) {
    for (int s = 0; s < 4; ++s) {
      if (seen[i][s]) continue;
      f.faces_per_piece[f.piece_of_node[i]]++;
      Port p{i, s};
      while (!seen[p.node][p.slot]) {
        seen[p.node][p.slot] = true;
        Port q = idx.across(d, p);
        p = Port{q.node, (q.slot + 1) % 4};
      }
    }
  }
  return f;
}

}  // namespace

int count_faces(const Diagram& d) {
  auto f = face_census(d);
  return std::accumulate(f.faces_per_piece.begin(), f.faces_per_piece.end(), 0);
}

bool is_planar(const Diagram& d) {
  auto f = face_census(d);
  std::vector<int> nodes(f.pieces, 0);
  for (int p : f.piece_of_node) nodes[p]++;
  for (int p = 0; p < f.pieces; ++p)
    if (f.faces_per_piece[p] != nodes[p] + 2) return false;
  return true;
}

// ---- canonical form

namespace {

Diagram normalize_rotation(const Diagram& d) {
  PortIndex idx(d);
  Diagram r = d;
  std::vector<int> rot(d.nodes.size(), 0);
  for (int n = 0; n < d.node_count(); ++n) {
    for (int s = 0; s < 4; ++s)
      if (!idx.at[n][s].out && !idx.at[n][(s + 1) % 4].out) rot[n] = s;
    if (rot[n] % 2 == 1) r.nodes[n] = flip_kind(r.nodes[n]);
  }
  auto fix = [&](Port& p) { p.slot = (p.slot - rot[p.node] + 4) % 4; };
  for (auto& a : r.arcs) {
    fix(a.from);
    fix(a.to);
  }
  return r;
}

}  // namespace

Diagram canonical(const Diagram& d0) {
  require_valid(d0);
  Diagram d = normalize_rotation(d0);
  PortIndex idx(d);
  int n = d.node_count();

  // connected pieces
  std::vector<int> piece(n, -1);
  std::vector<std::vector<int>> members;
  for (int i = 0; i < n; ++i) {
    if (piece[i] >= 0) continue;
    int id = static_cast<int>(members.size());
    members.emplace_back();
    std::vector<int> stack{i};
    piece[i] = id;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      members[id].push_back(u);
      for (int s = 0; s < 4; ++s) {
        int v = idx.across(d, {u, s}).node;
        if (piece[v] < 0) {
          piece[v] = id;
          stack.push_back(v);
        }
      }
    }
  }

  struct Best {
    std::vector<int> code;
    std::vector<int> order;  // order[k] = old node with new label k
  };
  std::vector<Best> best(members.size());
  std::vector<int> label(n, -1);
  for (std::size_t pc = 0; pc < members.size(); ++pc) {
    for (int start : members[pc]) {
      for (int u : members[pc]) label[u] = -1;
      std::vector<int> order{start};
      label[start] = 0;
      for (std::size_t qi = 0; qi < order.size(); ++qi) {
        int u = order[qi];
        for (int s = 0; s < 4; ++s) {
          int v = idx.across(d, {u, s}).node;
          if (label[v] < 0) {
            label[v] = static_cast<int>(order.size());
            order.push_back(v);
          }
        }
      }
      std::vector<int> code;
      code.reserve(order.size() * 5);
      for (int u : order) {
        code.push_back(static_cast<int>(d.nodes[u]));
        for (int s = 2; s < 4; ++s) {
          Port t = idx.across(d, {u, s});
          code.push_back(label[t.node]);
          code.push_back(t.slot);
        }
      }
      if (best[pc].order.empty() || code < best[pc].code) best[pc] = {std::move(code), std::move(order)};
    }
  }

  std::vector<std::size_t> perm(members.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (best[a].code.size() != best[b].code.size()) return best[a].code.size() < best[b].code.size();
    return best[a].code < best[b].code;
  });

  std::vector<int> newid(n, -1);
  int next = 0;
  for (std::size_t pc : perm)
    for (int u : best[pc].order) newid[u] = next++;

  Diagram r;
  r.name = d0.name;
  r.free_loops = d.free_loops;
  r.nodes.resize(n);
  for (int u = 0; u < n; ++u) r.nodes[newid[u]] = d.nodes[u];
  for (const auto& a : d.arcs) r.arcs.push_back({{newid[a.from.node], a.from.slot}, {newid[a.to.node], a.to.slot}});
  std::sort(r.arcs.begin(), r.arcs.end());
  return r;
}

std::string canonical_text(const Diagram& d) {
  Diagram c = canonical(d);
  c.name = "canonical";
  return serialize(c);
}

bool equivalent(const Diagram& a, const Diagram& b) { return canonical_text(a) == canonical_text(b); }

}  // namespace kg
