#include "kg/bracket.hpp"

#include <cstdint>
#include <map>
#include <numeric>

#include "kg/parallel.hpp"

namespace kg {

LaurentPoly loop_value() { return -(A(2) + A(-2)); }

namespace {

// The two smoothings of a crossing: pairs (0,3),(1,2) or (0,1),(2,3).
// For XPos the first is the A-smoothing, for XNeg the second.
constexpr int kPair03[4] = {3, 2, 1, 0};
constexpr int kPair01[4] = {1, 0, 3, 2};

const int* a_smoothing(NodeKind k) { return k == NodeKind::XPos ? kPair03 : kPair01; }
const int* b_smoothing(NodeKind k) { return k == NodeKind::XPos ? kPair01 : kPair03; }

void require_link(const Diagram& d) {
  require_valid(d);
  for (int n = 0; n < d.node_count(); ++n)
    if (!is_crossing(d.nodes[n]))
      throw InvalidDiagram("diagram " + d.name + " has vertex nodes; resolve them first");
  if (d.node_count() == 0 && d.free_loops == 0) throw InvalidDiagram("empty diagram");
}

LaurentPoly dpow(int k) { return pow(loop_value(), static_cast<unsigned>(k)); }

LaurentPoly sign_corrected(const Diagram& d, const LaurentPoly& bracket) {
  int e = components(d) - 1 + writhe(d);
  return e % 2 == 0 ? bracket : -bracket;
}

}  // namespace

LaurentPoly standard_bracket(const Diagram& d) {
  require_link(d);
  const int n = d.node_count();
  if (n == 0) return dpow(d.free_loops - 1);
  if (n > 30) throw Error("too many crossings for state enumeration");
  const int ports = 4 * n;
  std::vector<int> across(ports);
  for (const auto& a : d.arcs) {
    int p = 4 * a.from.node + a.from.slot, q = 4 * a.to.node + a.to.slot;
    across[p] = q;
    across[q] = p;
  }
  // counts[a][loops]
  const std::uint64_t states = std::uint64_t{1} << n;
  const int chunks = static_cast<int>(std::min<std::uint64_t>(states, 64));
  std::vector<std::vector<std::vector<std::int64_t>>> partial(
      chunks, std::vector<std::vector<std::int64_t>>(n + 1, std::vector<std::int64_t>(ports + 1, 0)));
  parallel_for(chunks, [&](int c) {
    std::uint64_t lo = states * c / chunks, hi = states * (c + 1) / chunks;
    std::vector<int> parent(ports);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      std::iota(parent.begin(), parent.end(), 0);
      int comps = ports;
      auto unite = [&](int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) {
          parent[x] = y;
          --comps;
        }
      };
      for (int p = 0; p < ports; ++p)
        if (p < across[p]) unite(p, across[p]);
      int na = 0;
      for (int v = 0; v < n; ++v) {
        bool use_a = (mask >> v) & 1;
        na += use_a;
        const int* pr = use_a ? a_smoothing(d.nodes[v]) : b_smoothing(d.nodes[v]);
        unite(4 * v, 4 * v + pr[0]);
        int other = pr[0] == 1 ? 2 : 1;
        unite(4 * v + other, 4 * v + pr[other]);
      }
      partial[c][na][comps]++;
    }
  });
  LaurentPoly total;
  std::vector<LaurentPoly> dp(ports + d.free_loops + 1);
  dp[0] = LaurentPoly(1);
  for (std::size_t k = 1; k < dp.size(); ++k) dp[k] = dp[k - 1] * loop_value();
  for (int na = 0; na <= n; ++na)
    for (int loops = 1; loops <= ports; ++loops) {
      std::int64_t cnt = 0;
      for (int c = 0; c < chunks; ++c) cnt += partial[c][na][loops];
      if (cnt == 0) continue;
      total += dp[loops + d.free_loops - 1].shifted(na - (n - na)) * LaurentPoly(Rational(static_cast<long>(cnt)));
    }
  return total;
}

LaurentPoly bracket_naive(const Diagram& d) { return sign_corrected(d, standard_bracket(d)); }

namespace {

// Frontier contraction. A state records how the dangling ports of the
// processed region are joined; equal states merge.
LaurentPoly contract(const Diagram& d) {
  const int n = d.node_count();
  const int ports = 4 * n;
  std::vector<int> across(ports);
  for (const auto& a : d.arcs) {
    int p = 4 * a.from.node + a.from.slot, q = 4 * a.to.node + a.to.slot;
    across[p] = q;
    across[q] = p;
  }

  // greedy minimum-frontier order
  std::vector<bool> done(n, false);
  std::vector<int> order;
  int frontier = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1, best_size = 0, best_links = 0;
    for (int v = 0; v < n; ++v) {
      if (done[v]) continue;
      int links = 0, opened = 0;
      for (int s = 0; s < 4; ++s) {
        int u = across[4 * v + s] / 4;
        if (u == v) continue;
        if (done[u]) ++links;
        else ++opened;
      }
      int size = frontier - links + opened;
      if (best < 0 || size < best_size || (size == best_size && links > best_links)) {
        best = v;
        best_size = size;
        best_links = links;
      }
    }
    done[best] = true;
    frontier = best_size;
    order.push_back(best);
  }

  using State = std::vector<int>;  // flattened sorted pairs
  std::map<State, LaurentPoly> cur;
  cur[State{}] = LaurentPoly(1);
  std::fill(done.begin(), done.end(), false);
  std::vector<int> mate(ports, -1);
  const LaurentPoly dval = loop_value();

  for (int v : order) {
    std::map<State, LaurentPoly> next;
    for (const auto& [state, value] : cur) {
      for (std::size_t i = 0; i < state.size(); i += 2) {
        mate[state[i]] = state[i + 1];
        mate[state[i + 1]] = state[i];
      }
      for (int choice = 0; choice < 2; ++choice) {
        const int* pr = choice == 0 ? a_smoothing(d.nodes[v]) : b_smoothing(d.nodes[v]);
        // local graph on v's ports plus terminals
        std::map<int, std::vector<int>> adj;
        auto edge = [&](int x, int y) {
          adj[x].push_back(y);
          adj[y].push_back(x);
        };
        for (int s = 0; s < 4; ++s)
          if (s < pr[s]) edge(4 * v + s, 4 * v + pr[s]);
        for (int s = 0; s < 4; ++s) {
          int p = 4 * v + s, q = across[p];
          if (q / 4 == v) {
            if (p < q) edge(p, q);
          } else if (done[q / 4]) {
            int m = mate[p];
            if (m / 4 == v) {
              if (p < m) edge(p, m);
            } else {
              edge(p, m);
            }
          } else {
            edge(p, q);
          }
        }
        // walk paths from terminals, then count remaining cycles
        std::map<int, bool> seen;
        std::vector<std::pair<int, int>> paths;
        for (const auto& [x, nb] : adj) {
          if (x / 4 == v || seen[x]) continue;
          int prev = x, at = nb[0];
          seen[x] = true;
          while (at / 4 == v) {
            seen[at] = true;
            const auto& e = adj[at];
            int nxt = e[0] == prev ? e[1] : e[0];
            if (e[0] == e[1]) nxt = e[0];
            prev = at;
            at = nxt;
          }
          seen[at] = true;
          paths.push_back({std::min(x, at), std::max(x, at)});
        }
        int loops = 0;
        for (const auto& [x, nb] : adj) {
          if (seen[x]) continue;
          ++loops;
          int prev = -1, at = x;
          while (!seen[at]) {
            seen[at] = true;
            const auto& e = adj[at];
            int nxt = e[0] != prev ? e[0] : e[1];
            if (e[0] == e[1]) nxt = e[0];
            prev = at;
            at = nxt;
          }
        }
        // new state: old pairs untouched by v, plus the new paths
        std::vector<std::pair<int, int>> pairs = paths;
        for (std::size_t i = 0; i < state.size(); i += 2) {
          int x = state[i], y = state[i + 1];
          if (x / 4 == v || y / 4 == v) continue;
          pairs.push_back({x, y});
        }
        std::sort(pairs.begin(), pairs.end());
        State ns;
        for (auto [x, y] : pairs) {
          ns.push_back(x);
          ns.push_back(y);
        }
        LaurentPoly w = value.shifted(choice == 0 ? 1 : -1);
        for (int k = 0; k < loops; ++k) w *= dval;
        auto [it, inserted] = next.emplace(std::move(ns), w);
        if (!inserted) it->second += w;
      }
      for (int x : state) mate[x] = -1;
    }
    done[v] = true;
    cur.clear();
    for (auto& [s, val] : next)
      if (!val.is_zero()) cur.emplace(s, std::move(val));
  }
  LaurentPoly total;
  for (const auto& [s, val] : cur) total += val;
  return total;
}

}  // namespace

LaurentPoly z_eval(const Diagram& d) {
  require_link(d);
  if (d.node_count() == 0) return sign_corrected(d, dpow(d.free_loops - 1));
  LaurentPoly closed = contract(d);
  LaurentPoly bracket = d.free_loops > 0 ? closed * dpow(d.free_loops - 1) : exact_divide(closed, loop_value());
  return sign_corrected(d, bracket);
}

LaurentPoly p_eval(const Diagram& d) { return z_eval(d).shifted(-3 * writhe(d)); }

}  // namespace kg
