#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Edge set with an injection sigma from edges to colors (family positions).
struct RainbowSet {
  EdgeSet edges;
  std::vector<std::pair<Edge, int>> sigma;  // sorted by edge

  explicit RainbowSet(int n = 0) : edges(n) {}

  void add(Edge e, int color);
  std::optional<int> color_of(Edge e) const;
  int size() const { return static_cast<int>(sigma.size()); }
};

/// sigma is injective, defined exactly on `edges`, and e lies in member sigma(e).
bool is_rainbow_for(const RainbowSet &r, const CycleFamily &family);

struct RainbowCycleCert {
  RainbowSet rainbow;
  Parity parity = Parity::Odd;
};

bool validate(const RainbowCycleCert &cert, const CycleFamily &family);

/// Builds a rainbow set (edge -> color) for `edges` if one exists, using
/// augmenting-path matching. `allowed` restricts the usable colors.
std::optional<RainbowSet> find_sdr(const CycleFamily &family, std::span<const Edge> edges,
                                   const std::vector<bool> *allowed = nullptr);

struct GreedyResult {
  RainbowSet rainbow;
  bool satisfied = false;
  /// Edge added last; it completes the property when satisfied.
  std::optional<Edge> last_added;
};

using EdgeProperty = std::function<bool(const EdgeSet &)>;

/// Augments a property-free rainbow set one edge at a time, taking the
/// lowest-index unrepresented color and its smallest edge outside the set.
/// `satisfied` is false if the augmentation stalls, which can only happen
/// when the property is not upward closed or the family is too small.
GreedyResult greedy_rainbow(const CycleFamily &family, const EdgeProperty &property);

/// Exact search over the cycles of the union graph.
std::optional<RainbowCycleCert> exhaustive_rainbow_cycle(const CycleFamily &family,
                                                         ParityFilter parity = ParityFilter::Any);

/// Rainbow odd cycle via a maximal rainbow forest; exact fallback when every
/// color is represented in the forest. Members must be odd cycles.
std::optional<RainbowCycleCert> find_rainbow_odd_cycle(const CycleFamily &family);

/// Rainbow cycle via greedy augmentation; exact fallback if it stalls.
/// Members must be cycles.
std::optional<RainbowCycleCert> find_rainbow_cycle(const CycleFamily &family);

struct RainbowPath {
  std::vector<Vertex> vertices;
  RainbowSet rainbow;
};

struct PathQuery {
  std::vector<bool> colors;  // usable colors; empty = all
  EdgeSet within;
  Vertex from = 0;
  Vertex to = 1;
  ParityFilter parity = ParityFilter::Any;
  int min_length = 1;
};

/// Simple from-to path inside `within` whose edges admit distinct usable
/// colors, with the requested parity and minimum length. Exact backtracking.
std::optional<RainbowPath> find_rainbow_path(const CycleFamily &family, const PathQuery &query);

struct RainbowStar {
  Vertex center = 0;
  RainbowSet rainbow;
};

/// Largest rainbow star (at least two edges) over all centers; ties go to the
/// smallest center. Nothing if no rainbow star exists.
std::optional<RainbowStar> max_rainbow_star(const CycleFamily &family);

}  // namespace rainbow
