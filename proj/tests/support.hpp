#pragma once

// Slow, direct oracles for the tests, written against the definitions and
// sharing no search code with the library, plus random family samplers.

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "rainbow/graph.hpp"

namespace oracle {

using namespace rainbow;

inline std::vector<std::vector<Vertex>> adjacency(const EdgeSet &g) {
  std::vector<std::vector<Vertex>> adj(g.n());
  for (Edge e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

/// Every cycle of g, found by walking simple paths from each start vertex
/// through larger vertices only and deduplicating the closed walks.
inline std::vector<EdgeSet> cycles_of(const EdgeSet &g) {
  const auto adj = adjacency(g);
  std::set<EdgeSet> seen;
  std::vector<Vertex> path;
  std::vector<bool> on(g.n(), false);
  std::function<void(Vertex, Vertex)> walk = [&](Vertex s, Vertex cur) {
    for (Vertex w : adj[cur]) {
      if (w == s && path.size() >= 3) {
        EdgeSet c(g.n());
        for (std::size_t i = 0; i < path.size(); ++i) c.insert(Edge(path[i], path[(i + 1) % path.size()]));
        seen.insert(c);
      }
      if (w <= s || on[w]) continue;
      on[w] = true;
      path.push_back(w);
      walk(s, w);
      path.pop_back();
      on[w] = false;
    }
  };
  for (Vertex s = 0; s < g.n(); ++s) {
    path = {s};
    on.assign(g.n(), false);
    on[s] = true;
    walk(s, s);
  }
  return {seen.begin(), seen.end()};
}

/// Distinct colors for the given edges, by trying every assignment.
inline bool has_sdr(const CycleFamily &family, const std::vector<Edge> &edges) {
  std::vector<bool> used(family.size(), false);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == edges.size()) return true;
    for (int c = 0; c < family.size(); ++c) {
      if (used[c] || !family[c].contains(edges[i])) continue;
      used[c] = true;
      if (go(i + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  return go(0);
}

inline bool rainbow_cycle(const CycleFamily &family, ParityFilter parity) {
  if (family.empty()) return false;
  for (const auto &c : cycles_of(family.union_edges()))
    if (matches(parity, parity_of(c.size())) && has_sdr(family, c.edges())) return true;
  return false;
}

inline bool bipartite(const EdgeSet &g) {
  const auto adj = adjacency(g);
  std::vector<int> side(g.n(), -1);
  for (Vertex s = 0; s < g.n(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : adj[x]) {
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          stack.push_back(y);
        } else if (side[y] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool has_odd_cycle(const EdgeSet &g) { return !bipartite(g); }

inline bool has_even_cycle(const EdgeSet &g) {
  for (const auto &c : cycles_of(g))
    if (c.size() % 2 == 0) return true;
  return false;
}

inline bool acyclic(const std::vector<Edge> &edges, int n) {
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (Edge e : edges) {
    const int a = find(e.u), b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

/// One edge per color, all distinct, forming a tree on m + 1 vertices.
inline bool rainbow_spanning_tree(const CycleFamily &family) {
  const int m = family.size();
  std::vector<std::vector<Edge>> options;
  for (const auto &mem : family) options.push_back(mem.edges());
  std::vector<Edge> pick;
  std::function<bool(int)> go = [&](int c) {
    if (c == m) {
      VertexSet vs;
      for (Edge e : pick) vs |= VertexSet{e.u, e.v};
      return acyclic(pick, family.n()) && (m == 0 || vs.size() == m + 1);
    }
    for (Edge e : options[c]) {
      if (std::find(pick.begin(), pick.end(), e) != pick.end()) continue;
      pick.push_back(e);
      if (go(c + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return go(0);
}

inline VertexSet vertices_of(const CycleFamily &family, std::uint32_t mask) {
  VertexSet vs;
  for (int i = 0; i < family.size(); ++i)
    if ((mask >> i) & 1U) vs |= family[i].vertices();
  return vs;
}

/// The recursive definition verbatim: identical copies of a cycle on
/// |copies| + 1 vertices, or two pruned cacti sharing exactly one vertex.
inline bool pruned_cactus(const CycleFamily &family) {
  const int m = family.size();
  if (m == 0) return false;
  std::map<std::uint32_t, bool> memo;
  std::function<bool(std::uint32_t)> rec = [&](std::uint32_t mask) -> bool {
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    bool ok = false;
    const int low = std::countr_zero(mask);
    bool identical = true;
    for (int i = 0; i < m; ++i)
      if (((mask >> i) & 1U) && !(family[i] == family[low])) identical = false;
    if (identical && is_cycle(family[low]) && family[low].vertices().size() == std::popcount(mask) + 1) ok = true;
    for (std::uint32_t a = (mask - 1) & mask; !ok && a; a = (a - 1) & mask) {
      if (!((a >> low) & 1U)) continue;
      const std::uint32_t b = mask & ~a;
      if ((vertices_of(family, a) & vertices_of(family, b)).size() == 1 && rec(a) && rec(b)) ok = true;
    }
    return memo[mask] = ok;
  };
  return rec((std::uint32_t{1} << m) - 1);
}

inline std::vector<Vertex> walk_cycle(const EdgeSet &c) {
  const auto adj = adjacency(c);
  std::vector<Vertex> order{c.vertices().min()};
  Vertex prev = -1;
  for (;;) {
    const Vertex cur = order.back();
    const Vertex next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
    if (next == order.front()) return order;
    prev = cur;
    order.push_back(next);
  }
}

/// Pruned cactus, or two vertex-disjoint saguaros plus an even cycle whose
/// vertices alternate between them.
inline bool saguaro(const CycleFamily &family) {
  const int m = family.size();
  if (m == 0) return false;
  std::map<std::uint32_t, bool> memo;
  std::function<bool(std::uint32_t)> rec = [&](std::uint32_t mask) -> bool {
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    std::vector<int> idx;
    for (int i = 0; i < m; ++i)
      if ((mask >> i) & 1U) idx.push_back(i);
    bool ok = pruned_cactus(family.subfamily(idx));
    for (int s : idx) {
      if (ok) break;
      if (is_cycle(family[s]) != Parity::Even) continue;
      const std::uint32_t rest = mask & ~(std::uint32_t{1} << s);
      if (!rest) continue;
      const int low = std::countr_zero(rest);
      const auto order = walk_cycle(family[s]);
      for (std::uint32_t a = rest; !ok && a; a = (a - 1) & rest) {
        const std::uint32_t b = rest & ~a;
        if (!b || !((a >> low) & 1U)) continue;
        const VertexSet va = vertices_of(family, a), vb = vertices_of(family, b);
        if (!(va & vb).empty()) continue;
        bool alternates = true;
        for (std::size_t i = 0; i < order.size(); ++i) {
          const Vertex x = order[i], y = order[(i + 1) % order.size()];
          const bool ok_edge = (va.contains(x) && vb.contains(y)) || (vb.contains(x) && va.contains(y));
          if (!ok_edge) alternates = false;
        }
        if (alternates && rec(a) && rec(b)) ok = true;
      }
    }
    return memo[mask] = ok;
  };
  return rec((std::uint32_t{1} << m) - 1);
}

/// Empty on one vertex, or two linkleaves on a vertex bipartition joined by
/// one member all of whose edges cross.
inline bool linkleaf(const CycleFamily &family) {
  const int m = family.size();
  if (m == 0) return true;
  std::function<bool(std::uint32_t, VertexSet)> rec = [&](std::uint32_t mask, VertexSet ground) -> bool {
    if (!mask) return ground.size() == 1;
    if (ground.size() != std::popcount(mask) + 1) return false;
    const auto gv = ground.to_vector();
    const Vertex first = gv[0];
    for (int b = 0; b < m; ++b) {
      if (!((mask >> b) & 1U)) continue;
      const std::uint32_t rest = mask & ~(std::uint32_t{1} << b);
      for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << (gv.size() - 1)); ++pick) {
        VertexSet v1{first}, v2;
        for (std::size_t i = 1; i < gv.size(); ++i) ((pick >> (i - 1)) & 1U ? v2 : v1).insert(gv[i]);
        if (v2.empty()) continue;
        bool crosses = true;
        for (Edge e : family[b].edges())
          if (!((v1.contains(e.u) && v2.contains(e.v)) || (v2.contains(e.u) && v1.contains(e.v)))) crosses = false;
        if (!crosses) continue;
        std::uint32_t a1 = 0, a2 = 0;
        bool inside = true;
        for (int i = 0; i < m && inside; ++i) {
          if (!((rest >> i) & 1U)) continue;
          const VertexSet vs = family[i].vertices();
          if ((vs - v1).empty()) a1 |= std::uint32_t{1} << i;
          else if ((vs - v2).empty()) a2 |= std::uint32_t{1} << i;
          else inside = false;
        }
        if (inside && rec(a1, v1) && rec(a2, v2)) return true;
      }
    }
    return false;
  };
  return rec((std::uint32_t{1} << m) - 1, family.union_vertices());
}

/// Some bipartition of the union's vertices is crossed by exactly one color.
inline bool mono_cut(const CycleFamily &family) {
  const auto vs = family.union_vertices().to_vector();
  if (vs.size() < 2) return false;
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << (vs.size() - 1)); ++pick) {
    VertexSet b;
    for (std::size_t i = 1; i < vs.size(); ++i)
      if ((pick >> (i - 1)) & 1U) b.insert(vs[i]);
    int crossing = 0;
    for (const auto &mem : family) {
      bool crosses = false;
      for (Edge e : mem.edges()) crosses |= b.contains(e.u) != b.contains(e.v);
      crossing += crosses;
    }
    if (crossing == 1) return true;
  }
  return false;
}

// ---------------------------------------------------------------- samplers

using Rng = std::mt19937_64;

inline EdgeSet random_cycle(int n, int length, Rng &rng) {
  std::vector<Vertex> vs(n);
  for (int i = 0; i < n; ++i) vs[i] = i;
  std::shuffle(vs.begin(), vs.end(), rng);
  vs.resize(length);
  return EdgeSet::cycle(n, vs);
}

/// Cycle of a random length in [3, n] restricted to the parity, when possible.
inline EdgeSet random_cycle(int n, ParityFilter parity, Rng &rng) {
  std::vector<int> lengths;
  for (int l = 3; l <= n; ++l)
    if (matches(parity, parity_of(l))) lengths.push_back(l);
  std::uniform_int_distribution<std::size_t> pick(0, lengths.size() - 1);
  return random_cycle(n, lengths[pick(rng)], rng);
}

inline CycleFamily random_cycle_family(int n, int size, ParityFilter parity, Rng &rng) {
  CycleFamily f(n);
  std::uniform_int_distribution<int> coin(0, 2);
  for (int i = 0; i < size; ++i) {
    // About a third of the members repeat an earlier one.
    if (i > 0 && coin(rng) == 0) f.push_back(f[std::uniform_int_distribution<int>(0, i - 1)(rng)]);
    else f.push_back(random_cycle(n, parity, rng));
  }
  return f;
}

inline EdgeSet random_graph(int n, double p, Rng &rng) {
  std::bernoulli_distribution keep(p);
  EdgeSet g(n);
  for (int i = 0; i < edge_count(n); ++i)
    if (keep(rng)) g.insert(Edge::from_index(i));
  return g;
}

/// Edge-disjoint nonempty members from a random partial colouring of K_n.
inline CycleFamily random_edge_disjoint(int n, int size, Rng &rng) {
  std::uniform_real_distribution<double> unit(0, 1);
  std::uniform_int_distribution<int> color(0, size - 1);
  for (;;) {
    const double unused = 0.7 * unit(rng);
    std::vector<EdgeSet> members(size, EdgeSet(n));
    for (int i = 0; i < edge_count(n); ++i)
      if (unit(rng) >= unused) members[color(rng)].insert(Edge::from_index(i));
    if (std::none_of(members.begin(), members.end(), [](const EdgeSet &e) { return e.empty(); }))
      return CycleFamily(n, members);
  }
}

/// Connected random subgraph: a random spanning tree of a random vertex
/// subset, plus a few extra edges inside it.
inline EdgeSet random_connected(int n, Rng &rng) {
  std::vector<Vertex> vs(n);
  for (int i = 0; i < n; ++i) vs[i] = i;
  std::shuffle(vs.begin(), vs.end(), rng);
  const int k = std::uniform_int_distribution<int>(2, n)(rng);
  EdgeSet g(n);
  for (int i = 1; i < k; ++i) g.insert(Edge(vs[i], vs[std::uniform_int_distribution<int>(0, i - 1)(rng)]));
  const int extra = std::uniform_int_distribution<int>(0, 2)(rng);
  for (int i = 0; i < extra; ++i) {
    const Vertex a = vs[std::uniform_int_distribution<int>(0, k - 1)(rng)];
    const Vertex b = vs[std::uniform_int_distribution<int>(0, k - 1)(rng)];
    if (a != b) g.insert(Edge(a, b));
  }
  return g;
}

}  // namespace oracle
