#include "rainbow/matroid.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace rainbow {

int graphic_rank(const EdgeSet &e) { return e.vertices().size() - static_cast<int>(components(e).size()); }

// ------------------------------------------------------------------- Rado

RadoReport rado_condition(const CycleFamily &family) {
  const int m = family.size();
  if (m > 24) throw PreconditionError("rado_condition enumerates subsets only for m <= 24");
  if (!(family.union_vertices() - VertexSet::range(m + 1)).empty())
    throw PreconditionError("members must live on K_{m+1}");
  std::vector<VertexSet> vs(m);
  for (int i = 0; i < m; ++i) {
    if (components(family[i]).size() != 1) throw PreconditionError("member " + std::to_string(i) + " is disconnected");
    vs[i] = family[i].vertices();
  }
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
    VertexSet u;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) u |= vs[std::countr_zero(rest)];
    if (u.size() < std::popcount(mask) + 1) {
      std::vector<int> bad;
      for (int i = 0; i < m; ++i)
        if ((mask >> i) & 1U) bad.push_back(i);
      return {false, bad};
    }
  }
  return {};
}

std::optional<RainbowSet> rainbow_spanning_tree(const CycleFamily &family) {
  const int m = family.size();
  if (!(family.union_vertices() - VertexSet::range(m + 1)).empty())
    throw PreconditionError("members must live on K_{m+1}");
  for (int i = 0; i < m; ++i)
    if (components(family[i]).size() != 1) throw PreconditionError("member " + std::to_string(i) + " is disconnected");

  struct Element {
    int color;
    Edge edge;
  };
  std::vector<Element> ground;
  for (int c = 0; c < m; ++c) family[c].for_each([&](Edge e) { ground.push_back({c, e}); });
  const int g = static_cast<int>(ground.size());
  std::vector<bool> in(g, false);

  // Matroid intersection: graphic (edges acyclic) with partition (one per color).
  for (int size = 0; size < m; ++size) {
    EdgeSet forest(family.n());
    std::vector<int> owner_of_edge(edge_count(family.n()), -1), owner_of_color(m, -1);
    for (int x = 0; x < g; ++x)
      if (in[x]) {
        forest.insert(ground[x].edge);
        owner_of_edge[ground[x].edge.index()] = x;
        owner_of_color[ground[x].color] = x;
      }

    // Exchange graph: x -> y when I - x + y stays a forest, y -> x when it
    // keeps one element per color.
    std::vector<std::vector<int>> adj(g);
    std::vector<bool> source(g, false), sink(g, false);
    for (int y = 0; y < g; ++y) {
      if (in[y]) continue;
      const Edge e = ground[y].edge;
      const auto path = forest.contains(e) ? std::vector<Vertex>{e.u, e.v} : forest_path(forest, e.u, e.v);
      if (path.empty()) source[y] = true;
      for (std::size_t k = 0; k + 1 < path.size(); ++k) adj[owner_of_edge[Edge(path[k], path[k + 1]).index()]].push_back(y);
      const int holder = owner_of_color[ground[y].color];
      if (holder < 0) sink[y] = true;
      else adj[y].push_back(holder);
    }

    std::vector<int> parent(g, -2);
    std::vector<int> queue;
    for (int y = 0; y < g; ++y)
      if (source[y]) {
        parent[y] = -1;
        queue.push_back(y);
      }
    int end = -1;
    for (std::size_t h = 0; h < queue.size() && end < 0; ++h) {
      const int x = queue[h];
      if (sink[x]) {
        end = x;
        break;
      }
      for (int y : adj[x])
        if (parent[y] == -2) {
          parent[y] = x;
          queue.push_back(y);
        }
    }
    if (end < 0) return std::nullopt;
    for (int x = end; x >= 0; x = parent[x]) in[x] = !in[x];
  }

  RainbowSet tree(family.n());
  for (int x = 0; x < g; ++x)
    if (in[x]) tree.add(ground[x].edge, ground[x].color);
  return tree;
}

// ------------------------------------------------------------------- GF(2)

Gf2Vector operator+(Gf2Vector a, Gf2Vector b) {
  if (a.dim != b.dim) throw PreconditionError("adding vectors of different dimension");
  return {a.dim, a.bits ^ b.bits};
}

std::uint64_t Gf2Basis::reduce(std::uint64_t v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if ((v >> pivots_[i]) & 1U) v ^= rows_[i];
  return v;
}

bool Gf2Basis::insert(std::uint64_t v) {
  const std::uint64_t r = reduce(v);
  if (!r) return false;
  const int p = 63 - std::countl_zero(r);
  for (auto &row : rows_)
    if ((row >> p) & 1U) row ^= r;
  rows_.push_back(r);
  pivots_.push_back(p);
  return true;
}

BinaryMatroid::BinaryMatroid(int dim, std::vector<Gf2Vector> ground) : dim_(dim), ground_(std::move(ground)) {
  if (dim < 0 || dim > 64) throw PreconditionError("binary matroid dimension must be in [0, 64]");
  Gf2Basis basis(dim);
  for (const auto &v : ground_) {
    if (v.dim != dim) throw PreconditionError("ground vector has the wrong dimension");
    basis.insert(v.bits);
  }
  rank_ = basis.rank();
}

int BinaryMatroid::rank_of(std::span<const int> subset) const {
  Gf2Basis basis(dim_);
  for (int i : subset) basis.insert(ground_.at(i).bits);
  return basis.rank();
}

bool binary_closure_contains(const BinaryMatroid &m, std::span<const int> subset, const Gf2Vector &e) {
  if (e.dim != m.dimension()) throw PreconditionError("vector dimension does not match the matroid");
  Gf2Basis basis(m.dimension());
  for (int i : subset) basis.insert(m[i].bits);
  return basis.spans(e.bits);
}

ElementRainbowSet matroid_rainbow_span(const BinaryMatroid &m, const Gf2Vector &e,
                                       const std::vector<std::vector<int>> &family) {
  const int n = static_cast<int>(family.size());
  if (m.rank() != n) throw PreconditionError("matroid rank must equal the family size");
  for (int i = 0; i < n; ++i)
    if (!binary_closure_contains(m, family[i], e))
      throw PreconditionError("member " + std::to_string(i) + " does not span e");

  ElementRainbowSet r;
  if (e.bits == 0) return r;
  std::vector<bool> represented(n, false);
  Gf2Basis with_e(m.dimension());
  with_e.insert(e.bits);
  bool holds_e = false;

  // Maximal rainbow R with R + e independent.
  for (bool grew = true; grew && !holds_e;) {
    grew = false;
    for (int c = 0; c < n && !grew; ++c) {
      if (represented[c]) continue;
      for (int a : family[c]) {
        const bool is_e = m[a] == e;
        if (!is_e && with_e.spans(m[a].bits)) continue;
        if (!is_e) with_e.insert(m[a].bits);
        holds_e = is_e;
        r.elements.push_back(a);
        r.colors.push_back(c);
        represented[c] = true;
        grew = true;
        break;
      }
    }
  }
  if (holds_e) return r;

  // Stuck: an unrepresented member has an element outside span(R), and adding
  // it closes e into the span.
  Gf2Basis span_r(m.dimension());
  for (int a : r.elements) span_r.insert(m[a].bits);
  const auto it = std::find(represented.begin(), represented.end(), false);
  if (it == represented.end()) throw std::logic_error("rainbow set outgrew the matroid rank");
  const int c = static_cast<int>(it - represented.begin());
  for (int a : family[c]) {
    if (span_r.spans(m[a].bits)) continue;
    r.elements.push_back(a);
    r.colors.push_back(c);
    span_r.insert(m[a].bits);
    if (!span_r.spans(e.bits)) throw std::logic_error("augmented rainbow set misses e");
    return r;
  }
  throw std::logic_error("member spans e but lies inside span(R)");
}

Gf2Vector encode_edge(int n, Edge e) {
  return {n + 1, 1U | (std::uint64_t{1} << (e.u + 1)) | (std::uint64_t{1} << (e.v + 1))};
}

OddCycleEncoding encode_odd_cycle_instance(const CycleFamily &family) {
  const int n = family.n();
  if (n + 1 > 64) throw PreconditionError("encoding supports n <= 63");
  std::vector<Gf2Vector> ground{Gf2Vector::unit(n + 1, 0)};
  for (int i = 0; i < edge_count(n); ++i) ground.push_back(encode_edge(n, Edge::from_index(i)));
  OddCycleEncoding enc{BinaryMatroid(n + 1, std::move(ground)), Gf2Vector::unit(n + 1, 0), {}};
  for (const auto &member : family) {
    std::vector<int> elems;
    member.for_each([&](Edge e) { elems.push_back(OddCycleEncoding::element_of(e)); });
    enc.family.push_back(std::move(elems));
  }
  return enc;
}

}  // namespace rainbow
