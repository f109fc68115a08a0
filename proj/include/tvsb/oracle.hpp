#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tvsb/graph.hpp"

namespace tvsb {

/// Largest input the exhaustive search accepts.
inline constexpr int kExactMaxEdges = 24;

struct ExactResult {
  int opt_size = 0;
  /// Lexicographically smallest optimal edge-index subset, as a subgraph.
  DiGraph witness;
};

/// Minimum 2-vertex strongly biconnected spanning subgraph by exhaustive
/// search over edge subsets of increasing size, starting at 2n.
/// Requires a feasible input with at most kExactMaxEdges edges.
ExactResult exact_min_2vsb(const DiGraph& g);

struct SolvedInstance {
  DiGraph graph;
  std::uint64_t seed = 0;
  ExactResult exact;
};

/// `count` generated instances with n in {4, 5}, each solved exactly.
/// `force_n` pins n for every instance. Instance seeds come from a splitmix64
/// stream seeded with `seed`.
std::vector<SolvedInstance> small_instance_suite(int count, std::uint64_t seed, std::optional<int> force_n = {});

}  // namespace tvsb
