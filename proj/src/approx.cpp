#include "tvsb/approx.hpp"

#include "tvsb/connectivity.hpp"

namespace tvsb {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::alg1: return "alg1";
    case Algorithm::alg2: return "alg2";
    case Algorithm::alg3: return "alg3";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "alg1") return Algorithm::alg1;
  if (name == "alg2") return Algorithm::alg2;
  if (name == "alg3") return Algorithm::alg3;
  return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;
using EdgeMask = std::vector<char>;

DiGraph from_mask(const DiGraph& g, const EdgeMask& keep) {
  std::vector<Edge> edges;
  edges.reserve(g.m());
  auto all = g.edges();
  for (std::size_t i = 0; i < all.size(); ++i)
    if (keep[i]) edges.push_back(all[i]);
  return DiGraph(g.n(), std::move(edges));
}

void require_2vsb(const DiGraph& g) {
  if (!is_2v_strongly_biconnected(g)) throw Error("input is not 2-vertex strongly biconnected");
}

// Deleting an edge whose tail has out-degree 2 or head has in-degree 2 leaves
// a vertex with a single out- or in-neighbor, which is then a strong
// articulation point. Such candidates are rejected without a full check.
bool degree_allows_deletion(const DiGraph& current, const Edge& e) {
  return current.out_degree(e.tail) > 2 && current.in_degree(e.head) > 2;
}

// Greedy single-pass deletion over the edges of g, skipping `frozen` ones.
// `current` must equal from_mask(g, keep) on entry and tracks it throughout.
template <class Keeps>
int deletion_scan(const DiGraph& g, EdgeMask& keep, const EdgeMask* frozen, DiGraph& current, Keeps keeps) {
  int removed = 0;
  auto all = g.edges();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!keep[i] || (frozen && (*frozen)[i])) continue;
    if (!degree_allows_deletion(current, all[i])) continue;
    keep[i] = 0;
    DiGraph candidate = from_mask(g, keep);
    if (keeps(candidate)) {
      current = std::move(candidate);
      ++removed;
    } else {
      keep[i] = 1;
    }
  }
  return removed;
}

EdgeMask minimal_2vcss_mask(const DiGraph& g, SapMethod sap) {
  EdgeMask keep(g.m(), 1);
  DiGraph current = g;
  deletion_scan(g, keep, nullptr, current, [sap](const DiGraph& h) { return is_2vertex_connected(h, sap); });
  return keep;
}

EdgeMask greedy_cover_mask(const DiGraph& g) {
  for (VertexId v = 0; v < g.n(); ++v) {
    if (g.out_degree(v) < 1 || g.in_degree(v) < 1) {
      throw Error("degree cover needs in- and out-degree >= 1 at every vertex; vertex " + std::to_string(v) +
                  " violates it");
    }
  }
  EdgeMask take(g.m(), 0);
  std::vector<int> out_deg(g.n(), 0), in_deg(g.n(), 0);
  auto all = g.edges();
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Edge& e = all[i];
    if (out_deg[e.tail] == 0 || in_deg[e.head] == 0) {
      take[i] = 1;
      ++out_deg[e.tail];
      ++in_deg[e.head];
    }
  }
  return take;
}

AlgoResult finish(const DiGraph& input, DiGraph subgraph, Algorithm a, Clock::time_point start, AlgoTrace trace) {
  AlgoResult r;
  r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  r.algorithm = a;
  r.edges_out = subgraph.m();
  if (a != Algorithm::alg1) trace.edges_removed = input.m() - subgraph.m();
  r.subgraph = std::move(subgraph);
  r.trace = std::move(trace);
  return r;
}

}  // namespace

DiGraph minimal_2vcss(const DiGraph& g, const ApproxOptions& opts) {
  if (!is_2vertex_connected(g, opts.sap)) throw Error("input is not 2-vertex connected");
  return from_mask(g, minimal_2vcss_mask(g, opts.sap));
}

AlgoResult algorithm1(const DiGraph& g, const ApproxOptions& opts) {
  require_2vsb(g);
  const auto start = Clock::now();
  AlgoTrace trace;

  EdgeMask keep = minimal_2vcss_mask(g, opts.sap);
  DiGraph current = from_mask(g, keep);
  trace.edges_removed = g.m() - current.m();
  trace.bap_set = b_articulation_points(current);
  trace.l_bap_count = static_cast<int>(trace.bap_set.size());

  auto all = g.edges();
  for (VertexId v : trace.bap_set) {
    while (!is_strongly_biconnected_without(current, v)) {
      auto without = delete_vertex(current, v);
      SbccIndex index(without.graph);
      int chosen = -1;
      for (std::size_t i = 0; i < all.size() && chosen < 0; ++i) {
        const Edge& e = all[i];
        if (keep[i] || e.tail == v || e.head == v) continue;
        if (!index.same(without.mapping[e.tail], without.mapping[e.head])) chosen = static_cast<int>(i);
      }
      if (chosen < 0) {
        throw Error("repair loop stalled: no unused edge crosses strongly biconnected components while vertex " +
                    std::to_string(v) + " is a b-articulation point");
      }
      keep[chosen] = 1;
      current = from_mask(g, keep);
      ++trace.edges_added;
    }
  }
  return finish(g, std::move(current), Algorithm::alg1, start, std::move(trace));
}

AlgoResult algorithm2(const DiGraph& g) {
  require_2vsb(g);
  const auto start = Clock::now();
  EdgeMask keep(g.m(), 1);
  DiGraph current = g;
  deletion_scan(g, keep, nullptr, current, [](const DiGraph& h) { return is_2v_strongly_biconnected(h); });
  return finish(g, std::move(current), Algorithm::alg2, start, {});
}

std::vector<Edge> greedy_degree_cover(const DiGraph& g) {
  EdgeMask take = greedy_cover_mask(g);
  std::vector<Edge> out;
  auto all = g.edges();
  for (std::size_t i = 0; i < all.size(); ++i)
    if (take[i]) out.push_back(all[i]);
  return out;
}

AlgoResult algorithm3(const DiGraph& g) {
  require_2vsb(g);
  const auto start = Clock::now();
  AlgoTrace trace;
  EdgeMask cover = greedy_cover_mask(g);
  for (char c : cover) trace.phase1_size += c;
  EdgeMask keep(g.m(), 1);
  DiGraph current = g;
  deletion_scan(g, keep, &cover, current, [](const DiGraph& h) { return is_2v_strongly_biconnected(h); });
  return finish(g, std::move(current), Algorithm::alg3, start, std::move(trace));
}

AlgoResult run_algorithm(Algorithm a, const DiGraph& g, const ApproxOptions& opts) {
  switch (a) {
    case Algorithm::alg1: return algorithm1(g, opts);
    case Algorithm::alg2: return algorithm2(g);
    case Algorithm::alg3: return algorithm3(g);
  }
  throw Error("unknown algorithm");
}

}  // namespace tvsb
