#include "tvsb/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace tvsb {

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.tail) + "," + std::to_string(e.head) + ")";
}

namespace {

void fill_rows(int n, const std::vector<Edge>& edges, bool outgoing, std::vector<int>& offsets,
               std::vector<VertexId>& targets) {
  offsets.assign(n + 1, 0);
  for (const Edge& e : edges) ++offsets[(outgoing ? e.tail : e.head) + 1];
  for (int v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  targets.resize(edges.size());
  std::vector<int> cursor(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : edges) {
    if (outgoing) {
      targets[cursor[e.tail]++] = e.head;
    } else {
      targets[cursor[e.head]++] = e.tail;
    }
  }
}

}  // namespace

DiGraph::DiGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw Error("negative vertex count");
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges_.size() * 2);
  for (const Edge& e : edges_) {
    if (!contains(e.tail) || !contains(e.head)) {
      throw Error("endpoint out of range in edge " + to_string(e));
    }
    if (e.tail == e.head) throw Error("self-loop " + to_string(e));
    auto key = static_cast<std::uint64_t>(e.tail) * static_cast<std::uint64_t>(n_) +
               static_cast<std::uint64_t>(e.head);
    if (!seen.insert(key).second) throw Error("duplicate edge " + to_string(e));
  }
  fill_rows(n_, edges_, true, out_offsets_, out_targets_);
  fill_rows(n_, edges_, false, in_offsets_, in_sources_);
}

bool DiGraph::has_edge(const Edge& e) const {
  if (!contains(e.tail) || !contains(e.head)) return false;
  auto out = out_neighbors(e.tail);
  return std::find(out.begin(), out.end(), e.head) != out.end();
}

int DiGraph::edge_index(const Edge& e) const {
  auto it = std::find(edges_.begin(), edges_.end(), e);
  return it == edges_.end() ? -1 : static_cast<int>(it - edges_.begin());
}

DiGraph build(int n, std::span<const std::pair<int, int>> edge_list) {
  if (n < 1) throw Error("graph needs at least one vertex");
  std::vector<Edge> edges;
  edges.reserve(edge_list.size());
  for (auto [u, v] : edge_list) edges.push_back({u, v});
  return DiGraph(n, std::move(edges));
}

DiGraph delete_edge(const DiGraph& g, const Edge& e) {
  int idx = g.edge_index(e);
  if (idx < 0) throw Error("edge not present " + to_string(e));
  std::vector<Edge> edges;
  edges.reserve(g.m() - 1);
  auto all = g.edges();
  edges.insert(edges.end(), all.begin(), all.begin() + idx);
  edges.insert(edges.end(), all.begin() + idx + 1, all.end());
  return DiGraph(g.n(), std::move(edges));
}

DiGraph add_edge(const DiGraph& g, const Edge& e) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.push_back(e);
  return DiGraph(g.n(), std::move(edges));
}

VertexDeletion delete_vertex(const DiGraph& g, VertexId v) {
  if (!g.contains(v)) throw Error("vertex out of range: " + std::to_string(v));
  if (g.n() < 2) throw Error("cannot delete the only vertex");
  std::vector<VertexId> mapping(g.n());
  for (VertexId u = 0; u < g.n(); ++u) mapping[u] = u < v ? u : (u == v ? -1 : u - 1);
  std::vector<Edge> edges;
  edges.reserve(g.m());
  for (const Edge& e : g.edges()) {
    if (e.tail == v || e.head == v) continue;
    edges.push_back({mapping[e.tail], mapping[e.head]});
  }
  return {DiGraph(g.n() - 1, std::move(edges)), std::move(mapping)};
}

DiGraph reverse(const DiGraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.m());
  for (const Edge& e : g.edges()) edges.push_back({e.head, e.tail});
  return DiGraph(g.n(), std::move(edges));
}

DiGraph induced_subgraph(const DiGraph& g, std::span<const VertexId> vertices) {
  std::vector<VertexId> relabel(g.n(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) relabel[vertices[i]] = static_cast<VertexId>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (relabel[e.tail] >= 0 && relabel[e.head] >= 0) {
      edges.push_back({relabel[e.tail], relabel[e.head]});
    }
  }
  return DiGraph(static_cast<int>(vertices.size()), std::move(edges));
}

std::vector<std::vector<VertexId>> UGraphView::adjacency() const {
  std::vector<std::vector<VertexId>> adj(n);
  for (auto [u, v] : pairs) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

UGraphView underlying(const DiGraph& g) {
  UGraphView u{g.n(), {}};
  u.pairs.reserve(g.m());
  for (const Edge& e : g.edges()) u.pairs.emplace_back(std::min(e.tail, e.head), std::max(e.tail, e.head));
  std::sort(u.pairs.begin(), u.pairs.end());
  u.pairs.erase(std::unique(u.pairs.begin(), u.pairs.end()), u.pairs.end());
  return u;
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw Error("line " + std::to_string(line) + ": " + what);
}

// Parses exactly "<a> <b>" with non-negative decimal integers.
bool parse_pair(std::string_view s, long long& a, long long& b) {
  auto sp = s.find(' ');
  if (sp == std::string_view::npos) return false;
  auto num = [](std::string_view t, long long& out) {
    if (t.empty()) return false;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
    return ec == std::errc{} && p == t.data() + t.size() && out >= 0;
  };
  return num(s.substr(0, sp), a) && num(s.substr(sp + 1), b);
}

}  // namespace

DiGraph parse(std::string_view text) {
  long long n = -1, m = -1;
  int header_line = 0;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') continue;
    long long a = 0, b = 0;
    if (!parse_pair(line, a, b)) {
      parse_fail(line_no, n < 0 ? "malformed header, expected \"n m\"" : "malformed edge line, expected \"u v\"");
    }
    if (n < 0) {
      if (a < 1) parse_fail(line_no, "vertex count must be >= 1");
      if (a > std::numeric_limits<VertexId>::max() / 2) parse_fail(line_no, "vertex count too large");
      n = a;
      m = b;
      header_line = line_no;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) parse_fail(line_no, "edge count mismatch: more than " + std::to_string(m) + " edges");
    if (a >= n || b >= n) parse_fail(line_no, "endpoint out of range");
    if (a == b) parse_fail(line_no, "self-loop");
    if (!seen.insert(static_cast<std::uint64_t>(a * n + b)).second) parse_fail(line_no, "duplicate edge");
    edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b)});
  }
  if (n < 0) throw Error("line 1: missing header");
  if (static_cast<long long>(edges.size()) != m) {
    parse_fail(header_line, "edge count mismatch: header says " + std::to_string(m) + ", found " +
                                std::to_string(edges.size()));
  }
  return DiGraph(static_cast<int>(n), std::move(edges));
}

std::string serialize(const DiGraph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << e.tail << ' ' << e.head << '\n';
  return out.str();
}

DiGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse(buf.str());
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

void write_graph_file(const std::string& path, const DiGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << serialize(g);
  if (!out) throw Error("write failed: " + path);
}

namespace fixtures {

namespace {
DiGraph lit(int n, std::initializer_list<std::pair<int, int>> es) {
  std::vector<std::pair<int, int>> v(es);
  return build(n, v);
}
}  // namespace

DiGraph c4() { return lit(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
DiGraph bk4() { return complete_bidirected(4); }
DiGraph oct8() { return lit(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {1, 2}, {2, 0}, {0, 3}, {3, 1}}); }
DiGraph bowtie() { return lit(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}); }
DiGraph bbowtie() {
  return lit(5, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 0}, {0, 2}, {0, 3}, {3, 0}, {3, 4}, {4, 3}, {4, 0}, {0, 4}});
}
DiGraph diamond() { return lit(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 0}}); }
DiGraph chain4() { return lit(4, {{0, 1}, {1, 2}, {2, 3}}); }

DiGraph complete_bidirected(int n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v)
      if (u != v) edges.push_back({u, v});
  return DiGraph(n, std::move(edges));
}

}  // namespace fixtures

}  // namespace tvsb
