#include "rainbow/decide.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

namespace rainbow {

namespace {

void require_edge_disjoint(const CycleFamily &family) {
  if (!family.pairwise_edge_disjoint()) throw PreconditionError("family members share an edge");
}

std::optional<Edge> first_crossing(const EdgeSet &e, VertexSet side) {
  std::optional<Edge> hit;
  e.for_each([&](Edge x) {
    if (!hit && side.contains(x.u) != side.contains(x.v)) hit = x;
  });
  return hit;
}

// Vertices on the u-side of tree - {cut}.
VertexSet side_of(const EdgeSet &tree, Edge cut) {
  EdgeSet rest = tree;
  rest.erase(cut);
  for (const VertexSet &c : components(rest))
    if (c.contains(cut.u)) return c;
  return VertexSet{cut.u};
}

int color_of_edge(const CycleFamily &family, Edge e) {
  for (int c = 0; c < family.size(); ++c)
    if (family[c].contains(e)) return c;
  return -1;
}

RainbowCycleCert cycle_cert(const CycleFamily &family, const EdgeSet &cycle) {
  RainbowSet r(family.n());
  cycle.for_each([&](Edge e) { r.add(e, color_of_edge(family, e)); });
  return {std::move(r), parity_of(cycle.size())};
}

EdgeSet fundamental_cycle(const EdgeSet &tree, Edge f) {
  auto path = forest_path(tree, f.u, f.v);
  return EdgeSet::cycle(tree.n(), path);
}

}  // namespace

bool validate(const MonoCutCert &cut, const CycleFamily &family) {
  const VertexSet all = family.union_vertices();
  if (cut.side_a.empty() || cut.side_b.empty()) return false;
  if (!(cut.side_a & cut.side_b).empty() || (cut.side_a | cut.side_b) != all) return false;
  if (cut.crossing_color < 0 || cut.crossing_color >= family.size()) return false;
  for (int c = 0; c < family.size(); ++c) {
    const bool crosses = first_crossing(family[c], cut.side_a).has_value();
    if (crosses != (c == cut.crossing_color)) return false;
  }
  return true;
}

int ReconnectionDigraph::min_out_degree() const {
  int best = std::numeric_limits<int>::max();
  for (const auto &o : out) best = std::min(best, static_cast<int>(o.size()));
  return out.empty() ? 0 : best;
}

ReconnectionDigraph build_reconnection_digraph(const CycleFamily &family, const std::vector<Edge> &tree_edges) {
  const EdgeSet tree(family.n(), std::span<const Edge>(tree_edges));
  ReconnectionDigraph d;
  d.out.resize(family.size());
  for (int i = 0; i < family.size(); ++i) {
    const VertexSet side = side_of(tree, tree_edges[i]);
    for (int j = 0; j < family.size(); ++j)
      if (j != i && first_crossing(family[j], side)) d.out[i].push_back(j);
  }
  return d;
}

std::vector<int> minimum_circuit(const ReconnectionDigraph &d) {
  const int n = d.size();
  std::vector<std::vector<int>> in(n);
  for (int i = 0; i < n; ++i)
    for (int j : d.out[i]) in[j].push_back(i);

  std::vector<int> best;
  for (int s = 0; s < n; ++s) {
    // dist[x] = length of a shortest path x -> s.
    std::vector<int> dist(n, -1);
    dist[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (int p : in[queue[h]])
        if (dist[p] < 0) {
          dist[p] = dist[queue[h]] + 1;
          queue.push_back(p);
        }
    int len = -1;
    for (int j : d.out[s])
      if (dist[j] >= 0 && (len < 0 || dist[j] + 1 < len)) len = dist[j] + 1;
    if (len < 0 || (!best.empty() && len > static_cast<int>(best.size()))) continue;

    std::vector<int> seq{s};
    int cur = s;
    for (int remaining = len - 1; remaining > 0; --remaining) {
      for (int j : d.out[cur])
        if (j != s && dist[j] == remaining) {
          cur = j;
          break;
        }
      seq.push_back(cur);
    }
    if (best.empty() || seq.size() < best.size() || (seq.size() == best.size() && seq < best)) best = seq;
  }
  return best;
}

CutOrCycle cut_or_rainbow_cycle(const CycleFamily &family) {
  if (family.empty()) throw PreconditionError("cut_or_rainbow_cycle needs at least one member");
  require_edge_disjoint(family);
  const VertexSet all = family.union_vertices();
  if (all.size() > family.size() + 1) throw PreconditionError("union spans more than |family| + 1 vertices");
  const int n = family.n();

  // (1) One canonical edge per member.
  std::vector<Edge> picks;
  EdgeSet tree(n);
  for (int i = 0; i < family.size(); ++i) {
    const Edge e = family[i].first();
    if (!forest_path(tree, e.u, e.v).empty()) {
      EdgeSet cycle = fundamental_cycle(tree, e);
      return cycle_cert(family, cycle);
    }
    tree.insert(e);
    picks.push_back(e);
  }

  // (2) A member nobody else reconnects gives a monochromatic cut.
  const ReconnectionDigraph d = build_reconnection_digraph(family, picks);
  for (int i = 0; i < family.size(); ++i) {
    if (!d.out[i].empty()) continue;
    VertexSet side = side_of(tree, picks[i]);
    VertexSet other = all - side;
    if (!side.contains(all.min())) std::swap(side, other);
    return MonoCutCert{side, other, i};
  }

  // (3) Minimum circuit c0 -> c1 -> ... -> c0.
  const std::vector<int> circuit = minimum_circuit(d);
  const auto k = circuit.size();
  std::vector<EdgeSet> cycles;
  EdgeSet reconnecting(n), removed(n);
  for (std::size_t j = 0; j < k; ++j) {
    const int from = circuit[j];
    const int to = circuit[(j + 1) % k];
    const Edge f = *first_crossing(family[to], side_of(tree, picks[from]));
    EdgeSet o = fundamental_cycle(tree, f);
    if (!o.contains(picks[to])) return cycle_cert(family, o);
    cycles.push_back(std::move(o));
    reconnecting.insert(f);
    removed.insert(picks[to]);
  }
  const EdgeSet eulerian = symmetric_difference(cycles);
  if (!reconnecting.subset_of(eulerian) || !eulerian.subset_of((tree - removed) | reconnecting))
    throw std::logic_error("reconnection circuit violates the inclusion chain");
  return cycle_cert(family, eulerian_cycle_decomposition(eulerian).front());
}

std::optional<MonoCutCert> find_monochromatic_cut(const CycleFamily &family) {
  require_edge_disjoint(family);
  const VertexSet all = family.union_vertices();
  if (all.size() > 20) throw PreconditionError("find_monochromatic_cut supports at most 20 vertices");
  if (all.size() < 2) return std::nullopt;
  const auto vs = all.to_vector();
  const int k = static_cast<int>(vs.size()) - 1;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    VertexSet b;
    for (int i = 0; i < k; ++i)
      if ((mask >> i) & 1U) b.insert(vs[i + 1]);
    const VertexSet a = all - b;
    int crossing = -1;
    bool single = true;
    for (int c = 0; c < family.size() && single; ++c) {
      if (!first_crossing(family[c], a)) continue;
      if (crossing >= 0) single = false;
      crossing = c;
    }
    if (single && crossing >= 0) return MonoCutCert{a, b, crossing};
  }
  return std::nullopt;
}

StarCycleSplit star_cycle_decompose(const CycleFamily &family, Vertex center) {
  const int m = family.size();
  if (m < 2) throw PreconditionError("star_cycle_decompose needs at least two members");
  if (!(family.union_vertices() - VertexSet::range(m + 1)).empty())
    throw PreconditionError("members must live on vertices [0, m+1)");

  std::vector<bool> is_star(m, false);
  for (int i = 0; i < m; ++i) {
    const EdgeSet &e = family[i];
    bool star = e.size() >= 2;
    e.for_each([&](Edge x) { star = star && x.has(center); });
    if (!star && !is_cycle(e)) throw PreconditionError("member " + std::to_string(i) + " is neither a star nor a cycle");
    is_star[i] = star;
  }
  if (!is_star[0]) throw PreconditionError("member 0 must be a star at the center");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && is_star[i] && family[i].intersects(family[j]))
        throw PreconditionError("star member " + std::to_string(i) + " shares an edge");
  if (exhaustive_rainbow_cycle(family, ParityFilter::Any)) throw PreconditionError("family has a rainbow cycle");

  // Maximal rainbow tree containing the center, colors 1..m-1.
  VertexSet tree{center};
  std::vector<bool> represented(m, false);
  for (bool grew = true; grew;) {
    grew = false;
    for (int c = 1; c < m; ++c) {
      if (represented[c]) continue;
      if (const auto e = first_crossing(family[c], tree)) {
        tree.insert(e->u);
        tree.insert(e->v);
        represented[c] = true;
        grew = true;
      }
    }
  }

  StarCycleSplit out;
  for (int c = 1; c < m; ++c)
    if (!represented[c]) out.cycles.push_back(c);
  out.covered = family[0].vertices();
  for (int c : out.cycles) {
    if (is_star[c] || family[c].vertices().contains(center)) throw std::logic_error("leftover member touches the center");
    out.covered |= family[c].vertices();
  }
  const int l = static_cast<int>(out.cycles.size());
  if (l <= 0 || l >= m || out.covered.size() > l + 2) throw std::logic_error("star/cycle split violates its vertex bound");
  return out;
}

}  // namespace rainbow
