#include "tvsb/generator.hpp"

#include <algorithm>
#include <unordered_set>
#include <vector>

#include "tvsb/connectivity.hpp"

namespace tvsb {

std::uint64_t RngState::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t RngState::below(std::uint64_t k) {
  if (k == 0) throw Error("rng bound must be positive");
  return next() % k;
}

namespace {

class EdgeDrawer {
 public:
  EdgeDrawer(int n, RngState& rng) : n_(n), rng_(rng) {}

  // Draws ordered pairs (tail first) until one is new and not a self-loop.
  Edge draw() {
    while (true) {
      auto u = static_cast<VertexId>(rng_.below(static_cast<std::uint64_t>(n_)));
      auto v = static_cast<VertexId>(rng_.below(static_cast<std::uint64_t>(n_)));
      if (u == v) continue;
      if (!used_.insert(static_cast<std::uint64_t>(u) * n_ + v).second) continue;
      return {u, v};
    }
  }

 private:
  int n_;
  RngState& rng_;
  std::unordered_set<std::uint64_t> used_;
};

}  // namespace

DiGraph generate(const GenConfig& cfg) {
  if (cfg.n < 4) throw Error("n must be >= 4");
  const int n = cfg.n;
  RngState rng(cfg.seed);
  EdgeDrawer drawer(n, rng);

  const long long initial = std::min(3LL * n, static_cast<long long>(n) * (n - 1));
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(initial) * 2);
  while (static_cast<long long>(edges.size()) < initial) edges.push_back(drawer.draw());

  DiGraph g(n, edges);
  while (!is_2v_strongly_biconnected(g)) {
    edges.push_back(drawer.draw());
    g = DiGraph(n, edges);
  }
  return g;
}

}  // namespace tvsb
