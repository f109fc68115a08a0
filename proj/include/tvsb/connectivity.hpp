#pragma once

#include <vector>

#include "tvsb/graph.hpp"

namespace tvsb {

/// Strongly connected components: comp[u] == comp[v] iff u and v are
/// mutually reachable. Ids are dense, assigned in completion order.
struct Partition {
  std::vector<int> comp;
  int count = 0;

  bool same(VertexId u, VertexId v) const { return comp[u] == comp[v]; }
  std::vector<std::vector<VertexId>> classes() const;
};

/// Biconnected components of an undirected graph. Blocks are sorted vertex
/// lists, ordered lexicographically; isolated vertices form singleton blocks.
struct BlockDecomposition {
  std::vector<std::vector<VertexId>> blocks;
  std::vector<VertexId> cut_vertices;
};

Partition scc(const DiGraph& g);
bool is_strongly_connected(const DiGraph& g);

BlockDecomposition blocks(const UGraphView& u);

/// n == 1: true. n == 2: true iff the pair is present. Otherwise connected
/// with no cut vertex.
bool is_biconnected(const UGraphView& u);

bool is_strongly_biconnected(const DiGraph& g);

/// Vertices whose removal breaks strong connectivity, found by deleting each
/// vertex in turn. Requires a strongly connected graph with n >= 3.
std::vector<VertexId> strong_articulation_points_bruteforce(const DiGraph& g);

/// n >= 3, strongly connected, no strong articulation point (brute force).
bool is_2vertex_connected(const DiGraph& g);

/// n >= 4, strongly biconnected, and strongly biconnected after deleting any
/// single vertex.
bool is_2v_strongly_biconnected(const DiGraph& g);

/// Vertices whose removal leaves a graph that is not strongly biconnected.
std::vector<VertexId> b_articulation_points(const DiGraph& g);

/// true iff g minus v is strongly biconnected, without materializing it.
bool is_strongly_biconnected_without(const DiGraph& g, VertexId v);

/// Every vertex has in-degree >= 2 and out-degree >= 2.
bool has_min_degree_two(const DiGraph& g);

/// Co-membership in a strongly biconnected component: w and x share an SCC,
/// and some block of the underlying graph of that SCC's induced subgraph
/// contains both.
class SbccIndex {
 public:
  explicit SbccIndex(const DiGraph& g);

  bool same(VertexId w, VertexId x) const;
  const Partition& partition() const { return partition_; }

 private:
  Partition partition_;
  // Per vertex, ascending ids of the blocks (inside its SCC) containing it.
  std::vector<std::vector<int>> block_ids_;
};

/// Requires w != x, both in range.
bool same_sbcc(const DiGraph& g, VertexId w, VertexId x);

}  // namespace tvsb
