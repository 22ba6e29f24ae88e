#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rainbow {

inline constexpr int kMaxVertices = 64;
inline constexpr int kMaxEdges = kMaxVertices * (kMaxVertices - 1) / 2;

using Vertex = int;

/// Thrown when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Parity { Odd, Even };
enum class ParityFilter { Odd, Even, Any };

inline bool matches(ParityFilter f, Parity p) {
  return f == ParityFilter::Any || (f == ParityFilter::Odd) == (p == Parity::Odd);
}
inline Parity parity_of(int length) { return length % 2 ? Parity::Odd : Parity::Even; }
const char *to_string(Parity p);
const char *to_string(ParityFilter f);

/// Undirected edge of K_n with u < v.
///
/// Edges are indexed colexicographically: index(u, v) = v(v-1)/2 + u. The
/// index of an edge does not depend on the ambient vertex count, so the edge
/// slots of K_n are a prefix of those of K_{n+1}. "Canonically smallest" edge
/// always means smallest index.
struct Edge {
  Vertex u = 0;
  Vertex v = 1;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr int index() const { return v * (v - 1) / 2 + u; }
  static Edge from_index(int idx);

  constexpr bool has(Vertex x) const { return x == u || x == v; }
  constexpr Vertex other(Vertex x) const { return x == u ? v : u; }

  friend constexpr bool operator==(const Edge &, const Edge &) = default;
  friend constexpr bool operator<(const Edge &a, const Edge &b) { return a.index() < b.index(); }
};

inline constexpr int edge_count(int n) { return n * (n - 1) / 2; }

/// Set of vertices in [0, 64) stored as a bit mask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr Vertex min() const { return std::countr_zero(bits_); }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr VertexSet &operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet &operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet &operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return a |= b; }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return a &= b; }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return a -= b; }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator &operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

/// A simple edge set inside K_n, stored as a bit row over the C(n,2) edge slots.
class EdgeSet {
 public:
  static constexpr int kWords = (kMaxEdges + 63) / 64;

  EdgeSet() = default;
  explicit EdgeSet(int n);
  EdgeSet(int n, std::initializer_list<Edge> edges);
  EdgeSet(int n, std::span<const Edge> edges);
  /// Complete graph K_n.
  static EdgeSet complete(int n);
  /// Cycle through the given vertices in order (closing edge implied).
  static EdgeSet cycle(int n, std::span<const Vertex> order);
  static EdgeSet cycle(int n, std::initializer_list<Vertex> order) {
    return cycle(n, std::span<const Vertex>(order.begin(), order.size()));
  }

  int n() const { return n_; }

  bool contains(Edge e) const { return contains_index(e.index()); }
  bool contains_index(int idx) const { return (bits_[idx >> 6] >> (idx & 63)) & 1U; }
  void insert(Edge e);
  void erase(Edge e);
  void toggle(Edge e);

  int size() const;
  bool empty() const;
  /// Vertices touched by at least one edge.
  VertexSet vertices() const;
  int degree(Vertex v) const;
  /// Smallest edge; the set must be nonempty.
  Edge first() const;
  std::vector<Edge> edges() const;
  /// Edges inside the given vertex set.
  EdgeSet induced(VertexSet vs) const;
  bool subset_of(const EdgeSet &o) const;
  bool intersects(const EdgeSet &o) const;

  template <class F>
  void for_each(F &&f) const {
    for (int w = 0; w < words_; ++w) {
      for (std::uint64_t rest = bits_[w]; rest; rest &= rest - 1) {
        f(Edge::from_index(w * 64 + std::countr_zero(rest)));
      }
    }
  }

  EdgeSet &operator|=(const EdgeSet &o);
  EdgeSet &operator&=(const EdgeSet &o);
  EdgeSet &operator^=(const EdgeSet &o);
  EdgeSet &operator-=(const EdgeSet &o);
  friend EdgeSet operator|(EdgeSet a, const EdgeSet &b) { return a |= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet &b) { return a &= b; }
  friend EdgeSet operator^(EdgeSet a, const EdgeSet &b) { return a ^= b; }
  friend EdgeSet operator-(EdgeSet a, const EdgeSet &b) { return a -= b; }

  friend bool operator==(const EdgeSet &a, const EdgeSet &b);
  /// Total order: by n, then by the bit rows read from the lowest edge index.
  friend bool operator<(const EdgeSet &a, const EdgeSet &b);

 private:
  void check_same_n(const EdgeSet &o) const;

  int n_ = 0;
  int words_ = 0;
  std::array<std::uint64_t, kWords> bits_{};
};

/// Ordered sequence of nonempty edge sets over K_n; positions are colors.
class CycleFamily {
 public:
  CycleFamily() = default;
  explicit CycleFamily(int n) : n_(n) {}
  CycleFamily(int n, std::vector<EdgeSet> members);

  int n() const { return n_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  const EdgeSet &operator[](int i) const { return members_[i]; }
  const std::vector<EdgeSet> &members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  void push_back(EdgeSet member);
  EdgeSet union_edges() const;
  VertexSet union_vertices() const;
  /// Members at the given positions, in that order.
  CycleFamily subfamily(std::span<const int> indices) const;
  bool pairwise_edge_disjoint() const;

  friend bool operator==(const CycleFamily &, const CycleFamily &) = default;

 private:
  int n_ = 0;
  std::vector<EdgeSet> members_;
};

/// Parity of E if E is a single cycle of length >= 3, otherwise nothing.
std::optional<Parity> is_cycle(const EdgeSet &e);

/// Vertices of a cycle in traversal order: starts at the smallest vertex and
/// steps to its smaller neighbor first. Precondition: is_cycle(c).
std::vector<Vertex> cycle_order(const EdgeSet &c);

/// Identifies a vertex subset S with a single new vertex.
///
/// The merged vertex takes the smallest id in S; the surviving vertices are
/// compacted downward so the result lives on K_{n-|S|+1}.
class Contraction {
 public:
  Contraction(int n, VertexSet merged);

  int source_n() const { return n_; }
  int target_n() const { return n_ - merged_.size() + 1; }
  VertexSet merged() const { return merged_; }
  Vertex merged_vertex() const { return image(merged_.min()); }
  Vertex image(Vertex v) const;
  /// Image of an edge set; edges inside S vanish and parallel images collapse.
  EdgeSet apply(const EdgeSet &e) const;

 private:
  int n_;
  VertexSet merged_;
  std::array<Vertex, kMaxVertices> image_{};
};

EdgeSet contract(const EdgeSet &e, VertexSet merged);

EdgeSet symmetric_difference(std::span<const EdgeSet> sets);

/// Splits an even-degree edge set into edge-disjoint cycles.
std::vector<EdgeSet> eulerian_cycle_decomposition(const EdgeSet &e);

/// Path segment of a cycle. A closed arc goes all the way around and repeats
/// its first vertex at the end.
struct Arc {
  std::vector<Vertex> path;
  bool closed = false;

  int length() const { return static_cast<int>(path.size()) - 1; }
  Parity parity() const { return parity_of(length()); }
  Vertex front() const { return path.front(); }
  Vertex back() const { return path.back(); }
  std::vector<Edge> edges() const;
  EdgeSet edge_set(int n) const;
  /// Vertices strictly between the endpoints.
  VertexSet interior() const;
};

/// Maximal arcs of cycle `c` whose endpoints lie in `vs` and whose interior
/// avoids it, in traversal order starting at the smallest shared vertex.
std::vector<Arc> arcs_by_vertex_set(const EdgeSet &c, VertexSet vs);

/// Every cycle of K_n with the given parity and length <= max_length, ordered
/// by (length, sorted vertex set, canonical rotation).
std::vector<EdgeSet> enumerate_cycles(int n, ParityFilter parity = ParityFilter::Any,
                                      std::optional<int> max_length = std::nullopt);

/// Connected components of the edge-induced graph (isolated vertices excluded).
std::vector<VertexSet> components(const EdgeSet &e);

/// Biconnected blocks of the edge-induced graph. Bridges appear as
/// single-edge blocks. Blocks are ordered by their smallest edge.
std::vector<EdgeSet> blocks(const EdgeSet &e);

bool contains_cycle(const EdgeSet &e);
bool contains_odd_cycle(const EdgeSet &e);
bool contains_even_cycle(const EdgeSet &e);

/// Vertex path between a and b inside forest f, or empty if disconnected.
std::vector<Vertex> forest_path(const EdgeSet &f, Vertex a, Vertex b);

/// Vertex sets on each side of the proper 2-colouring of a connected forest
/// component containing `root`; returns side membership as a bit mask of the
/// vertices at even distance from root.
VertexSet even_side(const EdgeSet &forest, Vertex root);

std::string to_string(const EdgeSet &e);

}  // namespace rainbow
