#include "tvsb/oracle.hpp"

#include "tvsb/connectivity.hpp"
#include "tvsb/generator.hpp"

namespace tvsb {

namespace {

// Include-first depth-first enumeration of k-subsets, which visits subsets in
// lexicographic order of their sorted edge indices.
class SubsetSearch {
 public:
  explicit SubsetSearch(const DiGraph& g) : g_(g), edges_(g.edges().begin(), g.edges().end()) {
    const int m = g.m();
    out_left_.assign(m + 1, std::vector<int>(g.n(), 0));
    in_left_.assign(m + 1, std::vector<int>(g.n(), 0));
    for (int i = m - 1; i >= 0; --i) {
      out_left_[i] = out_left_[i + 1];
      in_left_[i] = in_left_[i + 1];
      ++out_left_[i][edges_[i].tail];
      ++in_left_[i][edges_[i].head];
    }
  }

  std::optional<std::vector<Edge>> find(int k) {
    target_ = k;
    chosen_.clear();
    out_deg_.assign(g_.n(), 0);
    in_deg_.assign(g_.n(), 0);
    if (recurse(0)) return chosen_;
    return std::nullopt;
  }

 private:
  bool reachable_degrees(int i) const {
    for (VertexId v = 0; v < g_.n(); ++v) {
      if (out_deg_[v] + out_left_[i][v] < 2 || in_deg_[v] + in_left_[i][v] < 2) return false;
    }
    return true;
  }

  bool recurse(int i) {
    const int need = target_ - static_cast<int>(chosen_.size());
    if (need == 0) {
      for (VertexId v = 0; v < g_.n(); ++v)
        if (out_deg_[v] < 2 || in_deg_[v] < 2) return false;
      return is_2v_strongly_biconnected(DiGraph(g_.n(), chosen_));
    }
    if (g_.m() - i < need || !reachable_degrees(i)) return false;
    const Edge& e = edges_[i];
    chosen_.push_back(e);
    ++out_deg_[e.tail];
    ++in_deg_[e.head];
    if (recurse(i + 1)) return true;
    chosen_.pop_back();
    --out_deg_[e.tail];
    --in_deg_[e.head];
    return recurse(i + 1);
  }

  const DiGraph& g_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_left_, in_left_;
  std::vector<int> out_deg_, in_deg_;
  std::vector<Edge> chosen_;
  int target_ = 0;
};

}  // namespace

ExactResult exact_min_2vsb(const DiGraph& g) {
  if (g.m() > kExactMaxEdges) {
    throw Error("exact search limited to " + std::to_string(kExactMaxEdges) + " edges, got " + std::to_string(g.m()));
  }
  if (!is_2v_strongly_biconnected(g)) throw Error("input is not 2-vertex strongly biconnected");
  SubsetSearch search(g);
  for (int k = 2 * g.n(); k <= g.m(); ++k) {
    if (auto edges = search.find(k)) return {k, DiGraph(g.n(), std::move(*edges))};
  }
  throw Error("exact search found no feasible subgraph");
}

std::vector<SolvedInstance> small_instance_suite(int count, std::uint64_t seed, std::optional<int> force_n) {
  if (count < 1) throw Error("count must be >= 1");
  if (force_n && (*force_n < 4 || *force_n > 5)) throw Error("suite sizes are 4 or 5");
  RngState stream(seed);
  std::vector<SolvedInstance> out;
  out.reserve(count);
  // n <= 5 keeps m <= 20, so the guard never rejects; the budget only bounds
  // the loop.
  for (int attempts = 0; static_cast<int>(out.size()) < count && attempts < 100 * count; ++attempts) {
    int n = force_n ? *force_n : 4 + static_cast<int>(stream.below(2));
    std::uint64_t instance_seed = stream.next();
    DiGraph g = generate({n, instance_seed});
    if (g.m() > kExactMaxEdges) continue;
    ExactResult exact = exact_min_2vsb(g);
    out.push_back({std::move(g), instance_seed, std::move(exact)});
  }
  return out;
}

}  // namespace tvsb
