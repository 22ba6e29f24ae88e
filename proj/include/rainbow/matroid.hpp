#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/search.hpp"

namespace rainbow {

/// |V(E)| minus the number of components of the edge-induced graph.
int graphic_rank(const EdgeSet &e);

struct RadoReport {
  bool satisfied = true;
  /// Smallest violating color set (0-based) by bit pattern, when unsatisfied.
  std::optional<std::vector<int>> violating;
};

/// Checks |V(E_I)| >= |I| + 1 for every nonempty I. Members must be connected
/// and live on K_{m+1} where m = |family|; m <= 24.
RadoReport rado_condition(const CycleFamily &family);

/// Rainbow spanning tree of K_{m+1}, one edge per color, found by matroid
/// intersection of the graphic and color-partition matroids.
std::optional<RainbowSet> rainbow_spanning_tree(const CycleFamily &family);

/// Vector in GF(2)^dim, coordinate i stored in bit i.
struct Gf2Vector {
  int dim = 0;
  std::uint64_t bits = 0;

  static Gf2Vector unit(int dim, int i) { return {dim, std::uint64_t{1} << i}; }
  friend Gf2Vector operator+(Gf2Vector a, Gf2Vector b);
  friend bool operator==(const Gf2Vector &, const Gf2Vector &) = default;
};

/// Row-reduced basis with one pivot per row; rows are kept fully reduced.
class Gf2Basis {
 public:
  explicit Gf2Basis(int dim) : dim_(dim) {}

  int rank() const { return static_cast<int>(rows_.size()); }
  /// Remainder of v after elimination against the basis.
  std::uint64_t reduce(std::uint64_t v) const;
  bool spans(std::uint64_t v) const { return reduce(v) == 0; }
  /// Adds v if independent; returns whether it was.
  bool insert(std::uint64_t v);

 private:
  int dim_;
  std::vector<std::uint64_t> rows_;
  std::vector<int> pivots_;
};

/// Binary matroid given by a list of ground vectors of one dimension (<= 64).
class BinaryMatroid {
 public:
  BinaryMatroid(int dim, std::vector<Gf2Vector> ground);

  int dimension() const { return dim_; }
  int rank() const { return rank_; }
  const std::vector<Gf2Vector> &ground() const { return ground_; }
  const Gf2Vector &operator[](int i) const { return ground_[i]; }
  int size() const { return static_cast<int>(ground_.size()); }

  int rank_of(std::span<const int> subset) const;

 private:
  int dim_;
  std::vector<Gf2Vector> ground_;
  int rank_ = 0;
};

/// Whether e lies in the span of the ground elements indexed by `subset`.
bool binary_closure_contains(const BinaryMatroid &m, std::span<const int> subset, const Gf2Vector &e);

/// Rainbow set over ground indices: elements[k] represents colors[k].
struct ElementRainbowSet {
  std::vector<int> elements;
  std::vector<int> colors;
};

/// Given rank(M) = |family| and e in the closure of every family member,
/// returns a rainbow set whose closure contains e.
ElementRainbowSet matroid_rainbow_span(const BinaryMatroid &m, const Gf2Vector &e,
                                       const std::vector<std::vector<int>> &family);

/// Encoding of odd-cycle questions on K_n into GF(2)^{n+1}: vertex v maps to
/// coordinate v + 1 and edge uv to e0 + e_{u+1} + e_{v+1}.
struct OddCycleEncoding {
  BinaryMatroid matroid;  // ground: e0, then every edge of K_n by index
  Gf2Vector e0;
  std::vector<std::vector<int>> family;  // ground indices per member

  /// Ground index of the encoded edge.
  static int element_of(Edge e) { return 1 + e.index(); }
  static Edge edge_of(int element) { return Edge::from_index(element - 1); }
};

Gf2Vector encode_edge(int n, Edge e);
OddCycleEncoding encode_odd_cycle_instance(const CycleFamily &family);

}  // namespace rainbow
