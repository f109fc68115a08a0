#include "tvsb/dominators.hpp"

#include <algorithm>
#include <iterator>

#include "tvsb/connectivity.hpp"

namespace tvsb {

bool DomTree::dominates(VertexId d, VertexId v) const {
  if (!is_reachable(v)) return false;
  for (VertexId x = v; x >= 0; x = idom[x]) {
    if (x == d) return true;
  }
  return false;
}

DomTree dominator_tree(const DiGraph& g, VertexId root) {
  if (!g.contains(root)) throw Error("root out of range: " + std::to_string(root));
  const int n = g.n();

  // Postorder numbering of the vertices reachable from root.
  std::vector<int> po(n, -1);
  std::vector<VertexId> order;
  order.reserve(n);
  {
    std::vector<int> cursor(n, 0);
    std::vector<char> visited(n, 0);
    std::vector<VertexId> stack{root};
    visited[root] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      auto out = g.out_neighbors(v);
      if (cursor[v] < static_cast<int>(out.size())) {
        VertexId w = out[cursor[v]++];
        if (!visited[w]) {
          visited[w] = 1;
          stack.push_back(w);
        }
        continue;
      }
      stack.pop_back();
      po[v] = static_cast<int>(order.size());
      order.push_back(v);
    }
  }

  std::vector<VertexId> idom(n, -1);
  idom[root] = root;
  auto intersect = [&](VertexId a, VertexId b) {
    while (a != b) {
      while (po[a] < po[b]) a = idom[a];
      while (po[b] < po[a]) b = idom[b];
    }
    return a;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      VertexId v = *it;
      if (v == root) continue;
      VertexId candidate = -1;
      for (VertexId p : g.in_neighbors(v)) {
        if (idom[p] < 0) continue;
        candidate = candidate < 0 ? p : intersect(p, candidate);
      }
      if (candidate != idom[v]) {
        idom[v] = candidate;
        changed = true;
      }
    }
  }

  DomTree t;
  t.root = root;
  t.reachable.assign(n, 0);
  for (VertexId v : order) t.reachable[v] = 1;
  idom[root] = -1;
  t.idom = std::move(idom);
  return t;
}

std::vector<VertexId> nontrivial_dominators(const DiGraph& g, VertexId root) {
  DomTree t = dominator_tree(g, root);
  std::vector<char> mark(g.n(), 0);
  for (VertexId u = 0; u < g.n(); ++u) {
    if (!t.is_reachable(u)) throw Error("vertex " + std::to_string(u) + " unreachable from root");
    VertexId d = t.idom[u];
    if (d >= 0 && d != root) mark[d] = 1;
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.n(); ++v)
    if (mark[v]) out.push_back(v);
  return out;
}

std::vector<VertexId> strong_articulation_points_fast(const DiGraph& g) {
  if (g.n() < 3) throw Error("strong articulation points need n >= 3");
  if (!is_strongly_connected(g)) throw Error("graph is not strongly connected");
  constexpr VertexId root = 0;
  auto forward = nontrivial_dominators(g, root);
  auto backward = nontrivial_dominators(reverse(g), root);
  std::vector<VertexId> out;
  std::set_union(forward.begin(), forward.end(), backward.begin(), backward.end(), std::back_inserter(out));
  if (!is_strongly_connected(delete_vertex(g, root).graph)) {
    out.insert(out.begin(), root);
  }
  return out;
}

bool is_2vertex_connected(const DiGraph& g, SapMethod method) {
  if (method == SapMethod::brute_force) return is_2vertex_connected(g);
  if (g.n() < 3 || !is_strongly_connected(g)) return false;
  return strong_articulation_points_fast(g).empty();
}

}  // namespace tvsb
