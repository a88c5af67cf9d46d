#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sepdim/error.hpp"

namespace sepdim {

using Vertex = std::uint32_t;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  bool contains(Vertex x) const noexcept { return x == u || x == v; }
  bool disjoint_from(const Edge& o) const noexcept {
    return !contains(o.u) && !contains(o.v);
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph over sorted, non-negative vertex ids.
///
/// Vertices and edges are kept sorted, so two graphs compare equal exactly
/// when they have the same vertex and edge sets. Internally each vertex also
/// has a dense index (its position in `vertices()`), which the algorithms
/// use for array-based bookkeeping.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from explicit vertex and edge lists. Endpoints of edges
  /// are added to the vertex set. Throws InvalidArgument on self-loops or
  /// duplicate edges.
  Graph(std::vector<Vertex> vertices, const std::vector<Edge>& edges) {
    for (const Edge& e : edges) {
      if (e.u == e.v) {
        throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
      }
      vertices.push_back(e.u);
      vertices.push_back(e.v);
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    vertices_ = std::move(vertices);

    edges_ = edges;
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
      throw InvalidArgument("duplicate edge " + std::to_string(dup->u) + " " +
                            std::to_string(dup->v));
    }

    adjacency_.assign(vertices_.size(), {});
    for (const Edge& e : edges_) {
      adjacency_[index_of(e.u)].push_back(index_of(e.v));
      adjacency_[index_of(e.v)].push_back(index_of(e.u));
    }
    for (auto& row : adjacency_) std::sort(row.begin(), row.end());
  }

  static Graph from_edges(const std::vector<Edge>& edges) { return Graph({}, edges); }

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }

  bool has_vertex(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  bool has_edge(Vertex a, Vertex b) const {
    return a != b && std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
  }

  /// Dense index of `v`. Throws InvalidArgument for unknown ids.
  std::size_t index_of(Vertex v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) {
      throw InvalidArgument("vertex " + std::to_string(v) + " is not in the graph");
    }
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  Vertex vertex_at(std::size_t index) const { return vertices_.at(index); }

  /// Neighbour indices of the vertex with dense index `index`, sorted.
  std::span<const std::size_t> neighbours_of_index(std::size_t index) const {
    return adjacency_.at(index);
  }

  std::size_t degree(Vertex v) const { return adjacency_[index_of(v)].size(); }

  Vertex max_vertex() const { return vertices_.empty() ? 0 : vertices_.back(); }

  /// Subgraph on the same vertex set keeping only edges for which `keep` holds.
  template <class Pred>
  Graph filter_edges(Pred keep) const {
    std::vector<Edge> kept;
    for (const Edge& e : edges_) {
      if (keep(e)) kept.push_back(e);
    }
    return Graph(vertices_, kept);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline bool parse_id(std::string_view token, Vertex& out) {
  if (token.empty()) return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace detail

/// Parses the edge-list format: one "<u> <v>" per line, "v <id>" declares a
/// vertex, blank lines and lines starting with '#' are skipped.
inline Graph load_graph(std::string_view text) {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const auto line = detail::trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto tokens = detail::split_ws(line);
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two fields, got '" + std::string(line) + "'");
    }
    Vertex a = 0;
    if (tokens[0] == "v") {
      if (!detail::parse_id(tokens[1], a)) {
        throw ParseError(line_no, "bad vertex id '" + std::string(tokens[1]) + "'");
      }
      vertices.push_back(a);
      continue;
    }
    Vertex b = 0;
    if (!detail::parse_id(tokens[0], a) || !detail::parse_id(tokens[1], b)) {
      throw ParseError(line_no, "bad edge '" + std::string(line) + "'");
    }
    if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
    if (!seen.insert(Edge(a, b)).second) {
      throw ParseError(line_no, "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    }
    edges.emplace_back(a, b);
  }

  return Graph(std::move(vertices), edges);
}

/// Canonical text form: "v <id>" for isolated vertices, then one sorted edge
/// per line. load_graph(serialize_graph(g)) == g, and serializing again
/// reproduces the same bytes.
inline std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (g.neighbours_of_index(i).empty()) out << "v " << g.vertex_at(i) << '\n';
  }
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace sepdim
