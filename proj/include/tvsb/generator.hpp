#pragma once

#include <cstdint>

#include "tvsb/graph.hpp"

namespace tvsb {

/// splitmix64 generator. The output sequence depends only on the seed, so
/// generated instances are identical across platforms and languages.
class RngState {
 public:
  explicit RngState(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next();
  /// next() % k; the modulo bias is accepted. Throws for k == 0.
  std::uint64_t below(std::uint64_t k);

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

struct GenConfig {
  int n = 4;
  std::uint64_t seed = 0;
};

/// Random 2-vertex strongly biconnected instance: min(3n, n(n-1)) distinct
/// random edges, then one more random edge at a time until the graph
/// qualifies. Throws for n < 4.
DiGraph generate(const GenConfig& cfg);

}  // namespace tvsb
