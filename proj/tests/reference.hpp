#pragma once

// Definition-level reference predicates for tests. They work on plain edge
// lists with quadratic reachability and never touch the library's kernels,
// adjacency rows or block decomposition.

#include <algorithm>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "tvsb/graph.hpp"

namespace tvsb::ref {

using Edges = std::vector<Edge>;

inline Edges edges_of(const DiGraph& g) { return {g.edges().begin(), g.edges().end()}; }

// Vertices reachable from s along edges (directed or not), avoiding `dead`.
inline std::vector<char> reach(int n, const Edges& es, int s, const std::vector<char>& dead, bool directed,
                               bool backwards = false) {
  std::vector<char> seen(n, 0);
  seen[s] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Edge& e : es) {
      int a = backwards ? e.head : e.tail;
      int b = backwards ? e.tail : e.head;
      if (dead[a] || dead[b]) continue;
      if (seen[a] && !seen[b]) seen[b] = grew = 1;
      if (!directed && seen[b] && !seen[a]) seen[a] = grew = 1;
    }
  }
  return seen;
}

inline int alive_count(const std::vector<char>& dead) {
  return static_cast<int>(std::count(dead.begin(), dead.end(), 0));
}

inline int first_alive(const std::vector<char>& dead) {
  return static_cast<int>(std::find(dead.begin(), dead.end(), 0) - dead.begin());
}

inline bool strongly_connected(int n, const Edges& es, std::vector<char> dead) {
  int alive = alive_count(dead);
  if (alive <= 1) return true;
  int s = first_alive(dead);
  auto f = reach(n, es, s, dead, true);
  auto b = reach(n, es, s, dead, true, true);
  for (int v = 0; v < n; ++v)
    if (!dead[v] && (!f[v] || !b[v])) return false;
  return true;
}

inline bool connected_undirected(int n, const Edges& es, const std::vector<char>& dead) {
  int alive = alive_count(dead);
  if (alive <= 1) return true;
  auto r = reach(n, es, first_alive(dead), dead, false);
  for (int v = 0; v < n; ++v)
    if (!dead[v] && !r[v]) return false;
  return true;
}

// Underlying graph biconnected, with the n <= 2 conventions.
inline bool biconnected(int n, const Edges& es, const std::vector<char>& dead) {
  int alive = alive_count(dead);
  if (alive <= 1) return true;
  if (!connected_undirected(n, es, dead)) return false;
  if (alive == 2) return true;
  for (int v = 0; v < n; ++v) {
    if (dead[v]) continue;
    auto d = dead;
    d[v] = 1;
    if (!connected_undirected(n, es, d)) return false;
  }
  return true;
}

inline bool strongly_biconnected(int n, const Edges& es, const std::vector<char>& dead) {
  return strongly_connected(n, es, dead) && biconnected(n, es, dead);
}

inline bool strongly_biconnected(const DiGraph& g) {
  return strongly_biconnected(g.n(), edges_of(g), std::vector<char>(g.n(), 0));
}

inline bool strongly_connected(const DiGraph& g) {
  return strongly_connected(g.n(), edges_of(g), std::vector<char>(g.n(), 0));
}

inline bool two_v_strongly_biconnected(const DiGraph& g) {
  int n = g.n();
  if (n < 4) return false;
  auto es = edges_of(g);
  std::vector<char> dead(n, 0);
  if (!strongly_biconnected(n, es, dead)) return false;
  for (int v = 0; v < n; ++v) {
    dead[v] = 1;
    bool ok = strongly_biconnected(n, es, dead);
    dead[v] = 0;
    if (!ok) return false;
  }
  return true;
}

inline std::vector<VertexId> strong_articulation_points(const DiGraph& g) {
  auto es = edges_of(g);
  std::vector<VertexId> out;
  for (int v = 0; v < g.n(); ++v) {
    std::vector<char> dead(g.n(), 0);
    dead[v] = 1;
    if (!strongly_connected(g.n(), es, dead)) out.push_back(v);
  }
  return out;
}

inline std::vector<VertexId> b_articulation_points(const DiGraph& g) {
  auto es = edges_of(g);
  std::vector<VertexId> out;
  for (int v = 0; v < g.n(); ++v) {
    std::vector<char> dead(g.n(), 0);
    dead[v] = 1;
    if (!strongly_biconnected(g.n(), es, dead)) out.push_back(v);
  }
  return out;
}

inline bool two_vertex_connected(const DiGraph& g) {
  return g.n() >= 3 && strongly_connected(g) && strong_articulation_points(g).empty();
}

// Brute-force minimum over all edge subsets (m <= 20), for cross-checking
// the oracle module.
inline int brute_force_opt(const DiGraph& g) {
  auto es = edges_of(g);
  const int m = static_cast<int>(es.size());
  int best = m + 1;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    int k = __builtin_popcount(mask);
    if (k >= best) continue;
    Edges sub;
    std::vector<int> outd(g.n(), 0), ind(g.n(), 0);
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1u) {
        sub.push_back(es[i]);
        ++outd[es[i].tail];
        ++ind[es[i].head];
      }
    bool degrees_ok = true;
    for (int v = 0; v < g.n(); ++v) degrees_ok = degrees_ok && outd[v] >= 2 && ind[v] >= 2;
    if (!degrees_ok) continue;
    if (two_v_strongly_biconnected(DiGraph(g.n(), sub))) best = k;
  }
  return best;
}

// Uniform random simple digraph: each ordered pair present with probability p,
// edges emitted in a random order.
inline DiGraph random_digraph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Edges es;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && coin(rng)) es.push_back({u, v});
  std::shuffle(es.begin(), es.end(), rng);
  return DiGraph(n, es);
}

// Random strongly connected digraph: a random Hamiltonian cycle plus extra
// random edges.
inline DiGraph random_strongly_connected(int n, int extra, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::set<std::pair<int, int>> have;
  Edges es;
  for (int i = 0; i < n; ++i) {
    Edge e{perm[i], perm[(i + 1) % n]};
    if (e.tail != e.head && have.insert({e.tail, e.head}).second) es.push_back(e);
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < extra; ++i) {
    int u = pick(rng), v = pick(rng);
    if (u != v && have.insert({u, v}).second) es.push_back({u, v});
  }
  std::shuffle(es.begin(), es.end(), rng);
  return DiGraph(n, es);
}

}  // namespace tvsb::ref
