#pragma once

#include <vector>

#include "tvsb/graph.hpp"

namespace tvsb {

/// Immediate dominators of a flow graph rooted at `root`.
struct DomTree {
  VertexId root = 0;
  /// -1 for the root and for vertices unreachable from it.
  std::vector<VertexId> idom;
  std::vector<char> reachable;

  bool is_reachable(VertexId v) const { return reachable[v] != 0; }
  /// true iff d lies on every root -> v path (v reachable).
  bool dominates(VertexId d, VertexId v) const;
};

/// Iterative fixed point over reverse postorder (Cooper, Harvey, Kennedy).
DomTree dominator_tree(const DiGraph& g, VertexId root);

/// { v != root : v = idom(u) for some u != v }, ascending.
/// Throws if some vertex is unreachable from root.
std::vector<VertexId> nontrivial_dominators(const DiGraph& g, VertexId root);

/// Strong articulation points from the dominator trees of g and its reverse,
/// both rooted at 0, plus a direct check of vertex 0 itself.
/// Requires a strongly connected graph with n >= 3.
std::vector<VertexId> strong_articulation_points_fast(const DiGraph& g);

enum class SapMethod { dominators, brute_force };

/// n >= 3, strongly connected, and no strong articulation point.
bool is_2vertex_connected(const DiGraph& g, SapMethod method);

}  // namespace tvsb
