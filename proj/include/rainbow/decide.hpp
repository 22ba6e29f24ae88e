#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/search.hpp"

namespace rainbow {

/// Vertex bipartition of the union crossed by edges of exactly one member.
struct MonoCutCert {
  VertexSet side_a;  // holds the smallest union vertex
  VertexSet side_b;
  int crossing_color = -1;
};

bool validate(const MonoCutCert &cut, const CycleFamily &family);

/// Arc i -> j when some edge of member j reconnects tree - {tree_edges[i]}.
struct ReconnectionDigraph {
  std::vector<std::vector<int>> out;  // sorted successor lists

  int size() const { return static_cast<int>(out.size()); }
  int min_out_degree() const;
};

/// One edge per member, all distinct, forming a spanning tree of the union.
ReconnectionDigraph build_reconnection_digraph(const CycleFamily &family, const std::vector<Edge> &tree_edges);

/// Shortest directed circuit, ties broken by the lexicographically smallest
/// node sequence. Empty if the digraph is acyclic.
std::vector<int> minimum_circuit(const ReconnectionDigraph &d);

using CutOrCycle = std::variant<MonoCutCert, RainbowCycleCert>;

/// Total procedure for edge-disjoint families with |V(union)| <= |family| + 1.
///
/// Takes the smallest edge of every member as T. A cycle in T is rainbow.
/// Otherwise T spans the union, and a member whose tree edge no other member
/// reconnects gives a monochromatic cut. Failing that, a minimum circuit of
/// the reconnection digraph yields a rainbow Eulerian subgraph whose first
/// cycle is returned.
CutOrCycle cut_or_rainbow_cycle(const CycleFamily &family);

/// Exhaustive bipartition search (|V(union)| <= 20). The first witness in
/// increasing order of the side-B bit pattern is returned.
std::optional<MonoCutCert> find_monochromatic_cut(const CycleFamily &family);

struct StarCycleSplit {
  std::vector<int> cycles;  // indices of the cycles avoiding the center
  VertexSet covered;        // V(union of those cycles and member 0)
};

/// Family of m members on vertices [0, m+1): each member is a star at
/// `center` or a cycle, member 0 is a star, stars are edge-disjoint from all
/// other members, and there is no rainbow cycle. Returns l cycles avoiding the
/// center, 0 < l < m, whose union with member 0 spans at most l + 2 vertices.
StarCycleSplit star_cycle_decompose(const CycleFamily &family, Vertex center);

}  // namespace rainbow
