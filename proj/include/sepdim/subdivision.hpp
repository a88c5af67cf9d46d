#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "sepdim/graph.hpp"

namespace sepdim {

/// One subdivided edge {left, right} (left < right by id) and its new
/// middle vertex.
struct SubdividedEdge {
  Vertex left = 0;
  Vertex right = 0;
  Vertex mid = 0;

  friend bool operator==(const SubdividedEdge&, const SubdividedEdge&) = default;
};

class SubdivisionMap {
 public:
  SubdivisionMap() = default;
  SubdivisionMap(std::vector<Vertex> originals, std::vector<SubdividedEdge> entries)
      : originals_(std::move(originals)), entries_(std::move(entries)) {
    by_mid_ = entries_;
    std::sort(by_mid_.begin(), by_mid_.end(),
              [](const SubdividedEdge& a, const SubdividedEdge& b) { return a.mid < b.mid; });
  }

  std::span<const Vertex> original_vertices() const noexcept { return originals_; }
  /// Entries sorted by (left, right).
  std::span<const SubdividedEdge> entries() const noexcept { return entries_; }

  bool is_original(Vertex v) const {
    return std::binary_search(originals_.begin(), originals_.end(), v);
  }

  /// Middle vertex of the original edge {a, b}.
  Vertex mid_of(Vertex a, Vertex b) const {
    const Edge e(a, b);
    auto it = std::lower_bound(entries_.begin(), entries_.end(), e,
                               [](const SubdividedEdge& s, const Edge& x) {
                                 return Edge(s.left, s.right) < x;
                               });
    if (it == entries_.end() || it->left != e.u || it->right != e.v) {
      throw InvalidArgument("edge " + std::to_string(a) + " " + std::to_string(b) +
                            " was not subdivided");
    }
    return it->mid;
  }

  /// The subdivided edge whose middle vertex is `mid`.
  const SubdividedEdge& entry_for_mid(Vertex mid) const {
    auto it = std::lower_bound(by_mid_.begin(), by_mid_.end(), mid,
                               [](const SubdividedEdge& s, Vertex m) { return s.mid < m; });
    if (it == by_mid_.end() || it->mid != mid) {
      throw InvalidArgument("vertex " + std::to_string(mid) + " is not a subdivision vertex");
    }
    return *it;
  }

 private:
  std::vector<Vertex> originals_;
  std::vector<SubdividedEdge> entries_;
  std::vector<SubdividedEdge> by_mid_;
};

/// Full subdivision G^{1/2}. New ids start right above the largest original
/// id and are handed out in sorted edge order.
inline std::pair<Graph, SubdivisionMap> subdivide(const Graph& g) {
  std::vector<SubdividedEdge> entries;
  std::vector<Edge> edges;
  Vertex next = g.empty() ? 0 : g.max_vertex() + 1;
  for (const Edge& e : g.edges()) {
    entries.push_back({e.u, e.v, next});
    edges.emplace_back(e.u, next);
    edges.emplace_back(next, e.v);
    ++next;
  }
  std::vector<Vertex> originals(g.vertices().begin(), g.vertices().end());
  return {Graph(originals, edges), SubdivisionMap(originals, std::move(entries))};
}

}  // namespace sepdim
