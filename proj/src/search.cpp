#include "rainbow/search.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace rainbow {

namespace {

// Edge-to-color matching that grows and shrinks one edge at a time, LIFO.
class IncrementalSdr {
 public:
  IncrementalSdr(const CycleFamily &family, const std::vector<bool> *allowed = nullptr)
      : options_(edge_count(family.n())), color_slot_(family.size(), -1), seen_(family.size(), 0) {
    for (int c = 0; c < family.size(); ++c) {
      if (allowed && !allowed->empty() && !(*allowed)[c]) continue;
      family[c].for_each([&](Edge e) { options_[e.index()].push_back(c); });
    }
  }

  bool push(Edge e) {
    slot_edge_.push_back(e);
    slot_color_.push_back(-1);
    ++stamp_;
    if (augment(static_cast<int>(slot_edge_.size()) - 1)) return true;
    slot_edge_.pop_back();
    slot_color_.pop_back();
    return false;
  }

  void pop() {
    color_slot_[slot_color_.back()] = -1;
    slot_edge_.pop_back();
    slot_color_.pop_back();
  }

  RainbowSet snapshot(int n) const {
    RainbowSet r(n);
    for (std::size_t s = 0; s < slot_edge_.size(); ++s) r.add(slot_edge_[s], slot_color_[s]);
    return r;
  }

 private:
  bool augment(int slot) {
    for (int c : options_[slot_edge_[slot].index()]) {
      if (seen_[c] == stamp_) continue;
      seen_[c] = stamp_;
      if (color_slot_[c] < 0 || augment(color_slot_[c])) {
        color_slot_[c] = slot;
        slot_color_[slot] = c;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<int>> options_;
  std::vector<int> color_slot_;
  std::vector<unsigned> seen_;
  unsigned stamp_ = 0;
  std::vector<Edge> slot_edge_;
  std::vector<int> slot_color_;
};

using Adjacency = std::array<std::vector<Vertex>, kMaxVertices>;

Adjacency adjacency_of(const EdgeSet &e) {
  Adjacency adj;
  e.for_each([&](Edge x) {
    adj[x.u].push_back(x.v);
    adj[x.v].push_back(x.u);
  });
  for (auto &a : adj) std::sort(a.begin(), a.end());
  return adj;
}

void require_cycles(const CycleFamily &family, std::optional<Parity> parity) {
  for (int i = 0; i < family.size(); ++i) {
    const auto p = is_cycle(family[i]);
    if (!p || (parity && *p != *parity))
      throw PreconditionError("member " + std::to_string(i) + " is not " +
                              (parity ? std::string("an ") + to_string(*parity) + " cycle" : std::string("a cycle")));
  }
}

RainbowCycleCert close_cycle(RainbowSet forest_part, const std::vector<Vertex> &path, Edge closing, int color, int n) {
  RainbowSet r(n);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Edge e(path[i], path[i + 1]);
    r.add(e, *forest_part.color_of(e));
  }
  r.add(closing, color);
  const auto parity = parity_of(r.size());
  return {std::move(r), parity};
}

}  // namespace

// ------------------------------------------------------------ RainbowSet

void RainbowSet::add(Edge e, int color) {
  edges.insert(e);
  const auto it = std::lower_bound(sigma.begin(), sigma.end(), e,
                                   [](const auto &p, Edge x) { return p.first < x; });
  sigma.insert(it, {e, color});
}

std::optional<int> RainbowSet::color_of(Edge e) const {
  const auto it = std::lower_bound(sigma.begin(), sigma.end(), e,
                                   [](const auto &p, Edge x) { return p.first < x; });
  if (it == sigma.end() || !(it->first == e)) return std::nullopt;
  return it->second;
}

bool is_rainbow_for(const RainbowSet &r, const CycleFamily &family) {
  if (r.edges.n() != family.n() || r.size() != r.edges.size()) return false;
  std::vector<bool> used(family.size(), false);
  for (const auto &[e, c] : r.sigma) {
    if (c < 0 || c >= family.size() || used[c]) return false;
    if (!r.edges.contains(e) || !family[c].contains(e)) return false;
    used[c] = true;
  }
  return true;
}

bool validate(const RainbowCycleCert &cert, const CycleFamily &family) {
  if (!is_rainbow_for(cert.rainbow, family)) return false;
  const auto p = is_cycle(cert.rainbow.edges);
  return p && *p == cert.parity;
}

std::optional<RainbowSet> find_sdr(const CycleFamily &family, std::span<const Edge> edges,
                                   const std::vector<bool> *allowed) {
  IncrementalSdr sdr(family, allowed);
  for (Edge e : edges)
    if (!sdr.push(e)) return std::nullopt;
  return sdr.snapshot(family.n());
}

// ----------------------------------------------------------------- greedy

GreedyResult greedy_rainbow(const CycleFamily &family, const EdgeProperty &property) {
  GreedyResult result{RainbowSet(family.n()), false, std::nullopt};
  std::vector<bool> represented(family.size(), false);
  while (true) {
    const auto it = std::find(represented.begin(), represented.end(), false);
    if (it == represented.end()) return result;
    const int color = static_cast<int>(it - represented.begin());
    const EdgeSet eligible = family[color] - result.rainbow.edges;
    if (eligible.empty()) return result;
    const Edge e = eligible.first();
    result.rainbow.add(e, color);
    result.last_added = e;
    represented[color] = true;
    if (property(result.rainbow.edges)) {
      result.satisfied = true;
      return result;
    }
  }
}

// ------------------------------------------------------------- exhaustive

std::optional<RainbowCycleCert> exhaustive_rainbow_cycle(const CycleFamily &family, ParityFilter parity) {
  const int max_len = family.size();
  if (max_len < 3) return std::nullopt;
  IncrementalSdr sdr(family);
  std::optional<RainbowCycleCert> found;

  // Every cycle lies inside one block of the union graph.
  for (const auto &block : blocks(family.union_edges())) {
    if (block.size() < 3) continue;
    const Adjacency adj = adjacency_of(block);
    std::vector<Vertex> path;
    VertexSet on_path;
    Vertex start = 0;

    std::function<bool(Vertex)> dfs = [&](Vertex cur) -> bool {
      const int len = static_cast<int>(path.size());
      for (Vertex w : adj[cur]) {
        if (w == start) {
          // Canonical orientation: second vertex smaller than the last.
          if (len >= 3 && path[1] < cur && matches(parity, parity_of(len)) && sdr.push(Edge(cur, start))) {
            found = RainbowCycleCert{sdr.snapshot(family.n()), parity_of(len)};
            return true;
          }
          continue;
        }
        if (w < start || on_path.contains(w) || len + 1 > max_len) continue;
        if (!sdr.push(Edge(cur, w))) continue;
        path.push_back(w);
        on_path.insert(w);
        if (dfs(w)) return true;
        on_path.erase(w);
        path.pop_back();
        sdr.pop();
      }
      return false;
    };

    for (Vertex s : block.vertices()) {
      start = s;
      path.assign(1, s);
      on_path = VertexSet{s};
      if (dfs(s)) return found;
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------- constructive paths

std::optional<RainbowCycleCert> find_rainbow_odd_cycle(const CycleFamily &family) {
  require_cycles(family, Parity::Odd);
  const int n = family.n();

  // Maximal rainbow forest in one pass.
  std::array<int, kMaxVertices> parent;
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  RainbowSet forest(n);
  std::vector<bool> represented(family.size(), false);
  for (int c = 0; c < family.size(); ++c) {
    for (Edge e : family[c].edges()) {
      if (find(e.u) == find(e.v)) continue;
      parent[find(e.u)] = find(e.v);
      forest.add(e, c);
      represented[c] = true;
      break;
    }
  }

  const auto it = std::find(represented.begin(), represented.end(), false);
  if (it == represented.end()) return exhaustive_rainbow_cycle(family, ParityFilter::Odd);

  const int color = static_cast<int>(it - represented.begin());
  const EdgeSet &odd = family[color];
  // The unrepresented cycle lies inside one tree and has an edge inside one
  // side of its bipartition.
  const VertexSet even = even_side(forest.edges, odd.first().u);
  for (Edge e : odd.edges()) {
    if (even.contains(e.u) != even.contains(e.v)) continue;
    const auto path = forest_path(forest.edges, e.u, e.v);
    return close_cycle(forest, path, e, color, n);
  }
  throw std::logic_error("odd cycle respects a bipartition");
}

std::optional<RainbowCycleCert> find_rainbow_cycle(const CycleFamily &family) {
  require_cycles(family, std::nullopt);
  const auto greedy = greedy_rainbow(family, [](const EdgeSet &e) { return contains_cycle(e); });
  if (!greedy.satisfied) return exhaustive_rainbow_cycle(family, ParityFilter::Any);

  const Edge last = *greedy.last_added;
  EdgeSet forest = greedy.rainbow.edges;
  forest.erase(last);
  const auto path = forest_path(forest, last.u, last.v);
  return close_cycle(greedy.rainbow, path, last, *greedy.rainbow.color_of(last), family.n());
}

std::optional<RainbowPath> find_rainbow_path(const CycleFamily &family, const PathQuery &q) {
  if (q.from == q.to) throw PreconditionError("path endpoints must differ");
  IncrementalSdr sdr(family, &q.colors);
  const Adjacency adj = adjacency_of(q.within);
  std::vector<Vertex> path{q.from};
  VertexSet on_path{q.from};
  std::optional<RainbowPath> found;

  std::function<bool(Vertex)> dfs = [&](Vertex cur) -> bool {
    for (Vertex w : adj[cur]) {
      if (on_path.contains(w) || !sdr.push(Edge(cur, w))) continue;
      path.push_back(w);
      const int len = static_cast<int>(path.size()) - 1;
      if (w == q.to) {
        if (len >= q.min_length && matches(q.parity, parity_of(len))) {
          found = RainbowPath{path, sdr.snapshot(family.n())};
          return true;
        }
      } else {
        on_path.insert(w);
        if (dfs(w)) return true;
        on_path.erase(w);
      }
      path.pop_back();
      sdr.pop();
    }
    return false;
  };
  dfs(q.from);
  return found;
}

std::optional<RainbowStar> max_rainbow_star(const CycleFamily &family) {
  const EdgeSet u = family.union_edges();
  std::optional<RainbowStar> best;
  for (Vertex c : u.vertices()) {
    IncrementalSdr sdr(family);
    for (Vertex w : u.vertices()) {
      if (w == c || !u.contains(Edge(c, w))) continue;
      sdr.push(Edge(c, w));
    }
    RainbowSet r = sdr.snapshot(family.n());
    if (r.size() >= 2 && (!best || r.size() > best->rainbow.size())) best = RainbowStar{c, std::move(r)};
  }
  return best;
}

}  // namespace rainbow
