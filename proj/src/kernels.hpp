#pragma once

// Allocation-light connectivity kernels shared by the predicates and the
// approximation algorithms. Every kernel treats `skip` (or -1 for none) as a
// deleted vertex, so vertex-deletion checks never build a new graph.

#include <vector>

#include "tvsb/graph.hpp"

namespace tvsb::detail {

class Kernels {
 public:
  bool strongly_connected(const DiGraph& g, VertexId skip = -1);
  bool underlying_biconnected(const DiGraph& g, VertexId skip = -1);
  bool strongly_biconnected(const DiGraph& g, VertexId skip = -1) {
    return strongly_connected(g, skip) && underlying_biconnected(g, skip);
  }

 private:
  void reset(int n);

  std::vector<int> disc_;
  std::vector<int> low_;
  std::vector<VertexId> parent_;
  std::vector<int> cursor_;
  std::vector<VertexId> stack_;
  std::vector<char> seen_;
};

/// Scratch space is per thread; the kernels are reentrant across threads.
Kernels& kernels();

}  // namespace tvsb::detail
