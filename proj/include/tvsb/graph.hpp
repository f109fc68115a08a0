#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tvsb {

/// Dense zero-based vertex index, meaningful only relative to a graph's n.
using VertexId = int;

/// Thrown for malformed graphs, bad arguments and violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  VertexId tail = 0;
  VertexId head = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/// Immutable simple directed graph.
///
/// Edges keep their construction order (the canonical order). Adjacency is
/// stored in compressed rows; out_neighbors(v) and in_neighbors(v) list
/// neighbors in canonical edge order.
class DiGraph {
 public:
  DiGraph() = default;

  /// Throws Error on self-loops, duplicate edges or out-of-range endpoints.
  DiGraph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const VertexId> out_neighbors(VertexId v) const {
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const VertexId> in_neighbors(VertexId v) const {
    return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
  }
  int out_degree(VertexId v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
  int in_degree(VertexId v) const { return in_offsets_[v + 1] - in_offsets_[v]; }

  bool contains(VertexId v) const { return v >= 0 && v < n_; }
  bool has_edge(const Edge& e) const;
  /// Position of e in the canonical order, or -1.
  int edge_index(const Edge& e) const;

  friend bool operator==(const DiGraph& a, const DiGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> out_offsets_{0};
  std::vector<VertexId> out_targets_;
  std::vector<int> in_offsets_{0};
  std::vector<VertexId> in_sources_;
};

DiGraph build(int n, std::span<const std::pair<int, int>> edge_list);

DiGraph delete_edge(const DiGraph& g, const Edge& e);
DiGraph add_edge(const DiGraph& g, const Edge& e);

struct VertexDeletion {
  DiGraph graph;
  /// old id -> new id; -1 for the deleted vertex.
  std::vector<VertexId> mapping;
};

VertexDeletion delete_vertex(const DiGraph& g, VertexId v);

/// Same vertices, every edge flipped; canonical order follows g.
DiGraph reverse(const DiGraph& g);

/// Subgraph induced by `vertices` (ascending), relabeled to [0, vertices.size()).
DiGraph induced_subgraph(const DiGraph& g, std::span<const VertexId> vertices);

/// Underlying undirected graph: antiparallel edges collapse to one pair.
struct UGraphView {
  int n = 0;
  /// Unordered pairs stored as (min, max), sorted ascending.
  std::vector<std::pair<VertexId, VertexId>> pairs;

  std::vector<std::vector<VertexId>> adjacency() const;
};

UGraphView underlying(const DiGraph& g);

/// Graph text format: '#' comment lines, header "n m", then m lines "u v".
DiGraph parse(std::string_view text);
std::string serialize(const DiGraph& g);

DiGraph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const DiGraph& g);

/// Shared fixtures.
namespace fixtures {
DiGraph c4();
DiGraph bk4();
DiGraph oct8();
DiGraph bowtie();
DiGraph bbowtie();
DiGraph diamond();
DiGraph chain4();
/// Complete bidirected graph on n vertices, edges in (u, v) lexicographic order.
DiGraph complete_bidirected(int n);
}  // namespace fixtures

}  // namespace tvsb
