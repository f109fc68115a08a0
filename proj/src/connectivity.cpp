#include "tvsb/connectivity.hpp"

#include <algorithm>
#include <utility>

#include "kernels.hpp"

namespace tvsb {

namespace detail {

Kernels& kernels() {
  thread_local Kernels k;
  return k;
}

void Kernels::reset(int n) {
  disc_.assign(n, -1);
  low_.assign(n, 0);
  parent_.assign(n, -1);
  cursor_.assign(n, 0);
  seen_.assign(n, 0);
  stack_.clear();
}

bool Kernels::strongly_connected(const DiGraph& g, VertexId skip) {
  const int n = g.n();
  const int alive = n - (skip >= 0 ? 1 : 0);
  if (alive <= 1) return true;
  const VertexId start = skip == 0 ? 1 : 0;
  for (int pass = 0; pass < 2; ++pass) {
    seen_.assign(n, 0);
    stack_.clear();
    stack_.push_back(start);
    seen_[start] = 1;
    int reached = 1;
    while (!stack_.empty()) {
      VertexId v = stack_.back();
      stack_.pop_back();
      auto nbrs = pass == 0 ? g.out_neighbors(v) : g.in_neighbors(v);
      for (VertexId w : nbrs) {
        if (w == skip || seen_[w]) continue;
        seen_[w] = 1;
        ++reached;
        stack_.push_back(w);
      }
    }
    if (reached != alive) return false;
  }
  return true;
}

// Lowpoint DFS over the underlying graph. Antiparallel edges show up as
// repeated neighbors, and the edge back to the DFS parent is not excluded;
// neither changes which vertices are articulation points.
bool Kernels::underlying_biconnected(const DiGraph& g, VertexId skip) {
  const int n = g.n();
  const int alive = n - (skip >= 0 ? 1 : 0);
  if (alive <= 1) return true;
  const VertexId root = skip == 0 ? 1 : 0;
  if (alive == 2) {
    VertexId other = root + 1 == skip ? root + 2 : root + 1;
    return g.has_edge({root, other}) || g.has_edge({other, root});
  }
  reset(n);
  int time = 0;
  int root_children = 0;
  disc_[root] = low_[root] = time++;
  stack_.push_back(root);
  while (!stack_.empty()) {
    VertexId v = stack_.back();
    auto out = g.out_neighbors(v);
    auto in = g.in_neighbors(v);
    const int degree = static_cast<int>(out.size() + in.size());
    bool descended = false;
    while (cursor_[v] < degree) {
      int c = cursor_[v]++;
      VertexId w = c < static_cast<int>(out.size()) ? out[c] : in[c - out.size()];
      if (w == skip) continue;
      if (disc_[w] < 0) {
        parent_[w] = v;
        disc_[w] = low_[w] = time++;
        stack_.push_back(w);
        descended = true;
        break;
      }
      low_[v] = std::min(low_[v], disc_[w]);
    }
    if (descended) continue;
    stack_.pop_back();
    VertexId p = parent_[v];
    if (p < 0) continue;
    low_[p] = std::min(low_[p], low_[v]);
    if (p == root) {
      if (++root_children > 1) return false;
    } else if (low_[v] >= disc_[p]) {
      return false;
    }
  }
  return time == alive;
}

}  // namespace detail

std::vector<std::vector<VertexId>> Partition::classes() const {
  std::vector<std::vector<VertexId>> out(count);
  for (VertexId v = 0; v < static_cast<VertexId>(comp.size()); ++v) out[comp[v]].push_back(v);
  return out;
}

// Tarjan's lowlink algorithm with an explicit call stack.
Partition scc(const DiGraph& g) {
  const int n = g.n();
  Partition p;
  p.comp.assign(n, -1);
  std::vector<int> index(n, -1), low(n, 0), cursor(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<VertexId> tarjan_stack, call_stack;
  int counter = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (index[s] >= 0) continue;
    index[s] = low[s] = counter++;
    tarjan_stack.push_back(s);
    on_stack[s] = 1;
    call_stack.push_back(s);
    while (!call_stack.empty()) {
      VertexId v = call_stack.back();
      auto out = g.out_neighbors(v);
      if (cursor[v] < static_cast<int>(out.size())) {
        VertexId w = out[cursor[v]++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          tarjan_stack.push_back(w);
          on_stack[w] = 1;
          call_stack.push_back(w);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      call_stack.pop_back();
      if (!call_stack.empty()) {
        VertexId u = call_stack.back();
        low[u] = std::min(low[u], low[v]);
      }
      if (low[v] == index[v]) {
        VertexId w;
        do {
          w = tarjan_stack.back();
          tarjan_stack.pop_back();
          on_stack[w] = 0;
          p.comp[w] = p.count;
        } while (w != v);
        ++p.count;
      }
    }
  }
  return p;
}

bool is_strongly_connected(const DiGraph& g) { return detail::kernels().strongly_connected(g); }

// Hopcroft-Tarjan with an edge stack; iterative.
BlockDecomposition blocks(const UGraphView& u) {
  const int n = u.n;
  auto adj = u.adjacency();
  BlockDecomposition result;
  std::vector<int> disc(n, -1), low(n, 0), cursor(n, 0);
  std::vector<VertexId> parent(n, -1);
  std::vector<char> is_cut(n, 0);
  std::vector<std::pair<VertexId, VertexId>> edge_stack;
  std::vector<VertexId> call_stack;
  int time = 0;

  auto pop_block = [&](VertexId v, VertexId w) {
    std::vector<VertexId> block;
    while (true) {
      auto [a, b] = edge_stack.back();
      edge_stack.pop_back();
      block.push_back(a);
      block.push_back(b);
      if (a == v && b == w) break;
    }
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    result.blocks.push_back(std::move(block));
  };

  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    if (adj[root].empty()) {
      disc[root] = time++;
      result.blocks.push_back({root});
      continue;
    }
    int root_children = 0;
    disc[root] = low[root] = time++;
    call_stack.push_back(root);
    while (!call_stack.empty()) {
      VertexId v = call_stack.back();
      if (cursor[v] < static_cast<int>(adj[v].size())) {
        VertexId w = adj[v][cursor[v]++];
        if (disc[w] < 0) {
          parent[w] = v;
          disc[w] = low[w] = time++;
          edge_stack.emplace_back(v, w);
          call_stack.push_back(w);
        } else if (w != parent[v] && disc[w] < disc[v]) {
          edge_stack.emplace_back(v, w);
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      call_stack.pop_back();
      VertexId p = parent[v];
      if (p < 0) continue;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        if (p == root) {
          ++root_children;
        } else {
          is_cut[p] = 1;
        }
        pop_block(p, v);
      }
    }
    if (root_children > 1) is_cut[root] = 1;
  }
  std::sort(result.blocks.begin(), result.blocks.end());
  for (VertexId v = 0; v < n; ++v)
    if (is_cut[v]) result.cut_vertices.push_back(v);
  return result;
}

bool is_biconnected(const UGraphView& u) {
  if (u.n <= 1) return true;
  if (u.n == 2) return u.pairs.size() == 1;
  auto d = blocks(u);
  return d.blocks.size() == 1 && static_cast<int>(d.blocks.front().size()) == u.n;
}

bool is_strongly_biconnected(const DiGraph& g) { return detail::kernels().strongly_biconnected(g); }

bool is_strongly_biconnected_without(const DiGraph& g, VertexId v) {
  if (!g.contains(v)) throw Error("vertex out of range: " + std::to_string(v));
  return detail::kernels().strongly_biconnected(g, v);
}

std::vector<VertexId> strong_articulation_points_bruteforce(const DiGraph& g) {
  if (g.n() < 3) throw Error("strong articulation points need n >= 3");
  if (!is_strongly_connected(g)) throw Error("graph is not strongly connected");
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.n(); ++v) {
    if (!is_strongly_connected(delete_vertex(g, v).graph)) out.push_back(v);
  }
  return out;
}

bool is_2vertex_connected(const DiGraph& g) {
  if (g.n() < 3) return false;
  auto& k = detail::kernels();
  if (!k.strongly_connected(g)) return false;
  for (VertexId v = 0; v < g.n(); ++v) {
    if (!k.strongly_connected(g, v)) return false;
  }
  return true;
}

bool has_min_degree_two(const DiGraph& g) {
  for (VertexId v = 0; v < g.n(); ++v) {
    if (g.out_degree(v) < 2 || g.in_degree(v) < 2) return false;
  }
  return true;
}

bool is_2v_strongly_biconnected(const DiGraph& g) {
  if (g.n() < 4) return false;
  // Necessary condition: a vertex with a single out- (in-) neighbor u makes u
  // a strong articulation point.
  if (!has_min_degree_two(g)) return false;
  auto& k = detail::kernels();
  if (!k.strongly_biconnected(g)) return false;
  for (VertexId v = 0; v < g.n(); ++v) {
    if (!k.strongly_biconnected(g, v)) return false;
  }
  return true;
}

std::vector<VertexId> b_articulation_points(const DiGraph& g) {
  if (g.n() < 2) throw Error("b-articulation points need n >= 2");
  auto& k = detail::kernels();
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.n(); ++v) {
    if (!k.strongly_biconnected(g, v)) out.push_back(v);
  }
  return out;
}

SbccIndex::SbccIndex(const DiGraph& g) : partition_(scc(g)), block_ids_(g.n()) {
  int next_block = 0;
  for (const auto& members : partition_.classes()) {
    if (members.size() < 2) continue;
    auto decomposition = blocks(underlying(induced_subgraph(g, members)));
    for (const auto& block : decomposition.blocks) {
      for (VertexId local : block) block_ids_[members[local]].push_back(next_block);
      ++next_block;
    }
  }
}

bool SbccIndex::same(VertexId w, VertexId x) const {
  if (w == x) return true;
  if (!partition_.same(w, x)) return false;
  const auto& a = block_ids_[w];
  const auto& b = block_ids_[x];
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    a[i] < b[j] ? ++i : ++j;
  }
  return false;
}

bool same_sbcc(const DiGraph& g, VertexId w, VertexId x) {
  if (!g.contains(w) || !g.contains(x)) throw Error("vertex out of range");
  if (w == x) throw Error("same_sbcc needs two distinct vertices");
  return SbccIndex(g).same(w, x);
}

}  // namespace tvsb
