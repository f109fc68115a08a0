#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tvsb/dominators.hpp"
#include "tvsb/graph.hpp"

namespace tvsb {

enum class Algorithm { alg1, alg2, alg3 };

std::string_view to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct AlgoTrace {
  /// Algorithm 1: b-articulation points of the minimal 2-vertex connected
  /// subgraph before repair (l = |bap_set|).
  int l_bap_count = 0;
  std::vector<VertexId> bap_set;
  /// Algorithm 1 repair loop.
  int edges_added = 0;
  /// Edges of the input that are not in the output (for Algorithm 1: removed
  /// by the minimal 2-vertex connected scan).
  int edges_removed = 0;
  /// Algorithm 3: size of the greedy degree cover.
  int phase1_size = 0;
};

struct AlgoResult {
  DiGraph subgraph;
  Algorithm algorithm = Algorithm::alg1;
  /// Wall-clock time of the algorithm body; the input feasibility check is
  /// not included.
  std::chrono::nanoseconds elapsed{0};
  int edges_out = 0;
  AlgoTrace trace;
};

struct ApproxOptions {
  /// Strong articulation point routine inside the minimal 2-vertex connected
  /// subgraph scan.
  SapMethod sap = SapMethod::dominators;
};

/// One pass over the edges in canonical order, deleting an edge whenever the
/// rest stays 2-vertex connected. The result is minimal with that property.
/// Requires a 2-vertex connected input.
DiGraph minimal_2vcss(const DiGraph& g, const ApproxOptions& opts = {});

/// Minimal 2-vertex connected subgraph, then for each of its b-articulation
/// points v (ascending): while v is still one, add the first unused input edge
/// (w, x) whose endpoints are not in a common strongly biconnected component
/// of the current subgraph minus v.
AlgoResult algorithm1(const DiGraph& g, const ApproxOptions& opts = {});

/// Single deletion pass in canonical order keeping 2-vertex strong
/// biconnectivity. The output is minimal.
AlgoResult algorithm2(const DiGraph& g);

/// Edges (u, v) taken in canonical order whenever u has no out-edge or v has
/// no in-edge in the cover so far. Every vertex ends with in- and out-degree
/// at least one. Requires the same of g.
std::vector<Edge> greedy_degree_cover(const DiGraph& g);

/// Keeps the greedy degree cover, then deletes every other edge (canonical
/// order) whose removal keeps 2-vertex strong biconnectivity.
AlgoResult algorithm3(const DiGraph& g);

AlgoResult run_algorithm(Algorithm a, const DiGraph& g, const ApproxOptions& opts = {});

}  // namespace tvsb
