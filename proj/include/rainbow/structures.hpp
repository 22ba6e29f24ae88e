#pragma once

#include <optional>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

// Certificates are trees stored in a flat node vector; children are node
// indices. Child order is deterministic: the child whose vertex set is
// lexicographically smaller comes first.

struct PrunedCactusCert {
  struct Node {
    bool leaf = true;
    // leaf
    EdgeSet cycle;
    int multiplicity = 0;
    std::vector<int> members;
    // split
    int left = -1;
    int right = -1;
    Vertex shared = -1;
  };
  std::vector<Node> nodes;
  int root = -1;

  /// Union of member vertices under a node.
  VertexSet vertices(int node) const;
  std::vector<int> members(int node) const;
};

struct SaguaroCert {
  struct Node {
    bool bridge = false;
    PrunedCactusCert cactus;  // when !bridge
    int separator_member = -1;
    EdgeSet separator;
    int left = -1;
    int right = -1;
  };
  std::vector<Node> nodes;
  int root = -1;

  VertexSet vertices(int node) const;
  std::vector<int> members(int node) const;
};

struct LinkleafCert {
  struct Node {
    bool link = false;
    Vertex ground_vertex = -1;  // when !link
    int bridge_member = -1;
    EdgeSet bridge;
    int left = -1;
    int right = -1;
  };
  std::vector<Node> nodes;
  int root = -1;

  /// Ground set: the single vertex of an empty node, else the union of children.
  VertexSet ground(int node) const;
  std::vector<int> members(int node) const;
};

/// Block-structure recognition: every block of the union is a cycle, every
/// member equals a block, and each block B occurs exactly |B| - 1 times.
std::optional<PrunedCactusCert> is_pruned_cactus(const CycleFamily &family);

/// Exact recursive search with per-call memoisation over subfamilies.
std::optional<SaguaroCert> is_saguaro(const CycleFamily &family);

/// Members must be nonempty and pairwise edge-disjoint.
std::optional<LinkleafCert> is_linkleaf(const CycleFamily &family);

bool validate(const PrunedCactusCert &cert, const CycleFamily &family);
bool validate(const SaguaroCert &cert, const CycleFamily &family);
bool validate(const LinkleafCert &cert, const CycleFamily &family);

// ------------------------------------------------------------ generators

/// Gluing script for a pruned cactus. The first block occupies vertices
/// 0..length-1; every later block is glued at an existing vertex and gets
/// fresh vertices for the rest, numbered consecutively.
struct CactusScript {
  struct Block {
    int length = 3;
    std::optional<Vertex> glue;
  };
  std::vector<Block> blocks;
};

CycleFamily gen_pruned_cactus(const CactusScript &script, bool odd_only = false);

/// Either a pruned cactus or two saguaros joined by an even separator cycle.
/// Separator steps name a side and a vertex in that side's local numbering;
/// the right side's vertices are shifted past the left side's.
struct SaguaroScript {
  enum class Side { Left, Right };
  struct Step {
    Side side;
    Vertex local;
  };
  std::optional<CactusScript> cactus;
  std::vector<SaguaroScript> sides;  // exactly two when cactus is empty
  std::vector<Step> separator;
};

CycleFamily gen_saguaro(const SaguaroScript &script);

/// Either empty (one ground vertex) or two linkleaves joined by a bridge.
/// Bridge edges join (side, local vertex) endpoints.
struct LinkleafScript {
  struct End {
    SaguaroScript::Side side;
    Vertex local;
  };
  std::vector<LinkleafScript> sides;  // empty = one-vertex linkleaf
  std::vector<std::pair<End, End>> bridge;
};

CycleFamily gen_linkleaf(const LinkleafScript &script);

/// Copies of the six-square family on six vertices, each new copy sharing one
/// vertex with the union of the previous ones.
CycleFamily gen_glued_squares(int copies);

}  // namespace rainbow
