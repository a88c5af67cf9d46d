#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "sepdim/graph.hpp"

namespace sepdim {

struct DegeneracyOrder {
  std::vector<Vertex> order;
  std::size_t k = 0;
};

/// Min-degree peeling. Ties go to the smallest vertex id; `k` is the largest
/// residual degree seen at removal time, which equals the degeneracy.
inline DegeneracyOrder degeneracy_order(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> degree(n);
  std::set<std::pair<std::size_t, std::size_t>> queue;  // (residual degree, index)
  for (std::size_t i = 0; i < n; ++i) {
    degree[i] = g.neighbours_of_index(i).size();
    queue.emplace(degree[i], i);
  }
  std::vector<bool> removed(n, false);
  DegeneracyOrder out;
  out.order.reserve(n);
  while (!queue.empty()) {
    auto [deg, i] = *queue.begin();
    queue.erase(queue.begin());
    removed[i] = true;
    out.order.push_back(g.vertex_at(i));
    out.k = std::max(out.k, deg);
    for (std::size_t j : g.neighbours_of_index(i)) {
      if (removed[j]) continue;
      queue.erase({degree[j], j});
      --degree[j];
      queue.emplace(degree[j], j);
    }
  }
  return out;
}

/// Position of every vertex (by dense index) in a vertex ordering.
inline std::vector<std::size_t> positions_in(const Graph& g, const std::vector<Vertex>& order) {
  if (order.size() != g.vertex_count()) {
    throw InvalidArgument("ordering does not cover the vertex set");
  }
  std::vector<std::size_t> pos(g.vertex_count(), order.size());
  for (std::size_t p = 0; p < order.size(); ++p) {
    const std::size_t i = g.index_of(order[p]);
    if (pos[i] != order.size()) throw InvalidArgument("ordering repeats a vertex");
    pos[i] = p;
  }
  return pos;
}

/// True iff every vertex has at most `d.k` neighbours after it in `d.order`.
inline bool is_degeneracy_order(const Graph& g, const DegeneracyOrder& d) {
  if (d.order.size() != g.vertex_count()) return false;
  std::vector<std::size_t> pos;
  try {
    pos = positions_in(g, d.order);
  } catch (const InvalidArgument&) {
    return false;
  }
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    std::size_t later = 0;
    for (std::size_t j : g.neighbours_of_index(i)) later += pos[j] > pos[i];
    if (later > d.k) return false;
  }
  return true;
}

/// A forest given by child -> parent arcs. Every vertex has at most one
/// outgoing arc and parents always come later in the degeneracy order.
struct OrientedForest {
  std::vector<std::pair<Vertex, Vertex>> arcs;  // (child, parent), sorted by child

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(arcs.size());
    for (auto [c, p] : arcs) out.emplace_back(c, p);
    std::sort(out.begin(), out.end());
    return out;
  }
};

/// Orients every edge toward its endpoint that is later in `d.order`, then
/// hands the j-th outgoing arc of each vertex to forest j. Returns exactly
/// `d.k` forests.
inline std::vector<OrientedForest> partition_into_forests(const Graph& g,
                                                          const DegeneracyOrder& d) {
  if (!is_degeneracy_order(g, d)) throw InvalidArgument("not a degeneracy order of the graph");
  const auto pos = positions_in(g, d.order);
  std::vector<OrientedForest> forests(d.k);
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    std::vector<std::size_t> later;
    for (std::size_t j : g.neighbours_of_index(i)) {
      if (pos[j] > pos[i]) later.push_back(j);
    }
    std::sort(later.begin(), later.end(),
              [&](std::size_t a, std::size_t b) { return pos[a] < pos[b]; });
    for (std::size_t slot = 0; slot < later.size(); ++slot) {
      forests[slot].arcs.emplace_back(g.vertex_at(i), g.vertex_at(later[slot]));
    }
  }
  return forests;
}

struct Star {
  Vertex root = 0;
  std::vector<Vertex> leaves;  // sorted

  friend bool operator==(const Star&, const Star&) = default;
};

/// Spanning star forest: every vertex of the graph sits in exactly one star,
/// possibly as a leafless root.
struct StarForest {
  std::vector<Star> stars;          // sorted by root
  std::vector<Edge> covered_edges;  // sorted

  friend bool operator==(const StarForest&, const StarForest&) = default;
};

/// Checks vertex-disjointness, that covered edges are exactly the root-leaf
/// pairs, that those edges exist in `g`, and that every vertex is covered.
inline bool is_valid_star_forest(const StarForest& sf, const Graph& g) {
  std::vector<int> seen(g.vertex_count(), 0);
  std::vector<Edge> spokes;
  for (const Star& s : sf.stars) {
    if (!g.has_vertex(s.root)) return false;
    ++seen[g.index_of(s.root)];
    for (Vertex leaf : s.leaves) {
      if (!g.has_vertex(leaf) || !g.has_edge(s.root, leaf)) return false;
      ++seen[g.index_of(leaf)];
      spokes.emplace_back(s.root, leaf);
    }
  }
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) return false;
  std::sort(spokes.begin(), spokes.end());
  return spokes == sf.covered_edges;
}

namespace detail {

// Builds a spanning star forest from (centre, leaf) spokes. Stars with a
// single leaf are re-rooted at the smaller id, since both ends then have the
// same degree inside the star.
inline StarForest assemble_star_forest(const Graph& g,
                                       std::vector<std::pair<Vertex, Vertex>> spokes) {
  std::sort(spokes.begin(), spokes.end());
  StarForest sf;
  std::vector<bool> used(g.vertex_count(), false);
  for (std::size_t i = 0; i < spokes.size();) {
    Star s{spokes[i].first, {}};
    while (i < spokes.size() && spokes[i].first == s.root) s.leaves.push_back(spokes[i++].second);
    if (s.leaves.size() == 1 && s.leaves[0] < s.root) std::swap(s.root, s.leaves[0]);
    used[g.index_of(s.root)] = true;
    for (Vertex leaf : s.leaves) {
      used[g.index_of(leaf)] = true;
      sf.covered_edges.emplace_back(s.root, leaf);
    }
    sf.stars.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (!used[i]) sf.stars.push_back(Star{g.vertex_at(i), {}});
  }
  std::sort(sf.stars.begin(), sf.stars.end(),
            [](const Star& a, const Star& b) { return a.root < b.root; });
  std::sort(sf.covered_edges.begin(), sf.covered_edges.end());
  return sf;
}

}  // namespace detail

/// Splits one oriented forest into two star forests by the parity of each
/// arc's parent depth: arcs whose parent sits at even depth go to the first,
/// odd depth to the second. Empty halves are dropped.
inline std::vector<StarForest> split_forest_into_stars(const Graph& g,
                                                       const OrientedForest& forest) {
  const std::size_t n = g.vertex_count();
  std::vector<std::optional<std::size_t>> parent(n);
  for (auto [c, p] : forest.arcs) parent[g.index_of(c)] = g.index_of(p);

  std::vector<std::size_t> depth(n, 0);
  std::vector<bool> known(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> path;
    std::size_t cur = i;
    while (!known[cur] && parent[cur]) {
      path.push_back(cur);
      cur = *parent[cur];
    }
    known[cur] = true;
    std::size_t d = depth[cur];
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      depth[*it] = ++d;
      known[*it] = true;
    }
  }

  std::vector<std::pair<Vertex, Vertex>> spokes[2];
  for (auto [c, p] : forest.arcs) spokes[depth[g.index_of(p)] % 2].emplace_back(p, c);

  std::vector<StarForest> out;
  for (auto& half : spokes) {
    if (!half.empty()) out.push_back(detail::assemble_star_forest(g, std::move(half)));
  }
  return out;
}

/// At most 2k spanning star forests whose covered edges partition E(g).
inline std::vector<StarForest> star_forest_decomposition(const Graph& g) {
  const auto d = degeneracy_order(g);
  std::vector<StarForest> out;
  for (const auto& forest : partition_into_forests(g, d)) {
    for (auto& sf : split_forest_into_stars(g, forest)) out.push_back(std::move(sf));
  }
  return out;
}

struct Coloring {
  std::vector<std::vector<Vertex>> classes;  // classes[c] holds colour c+1, sorted

  std::size_t size() const noexcept { return classes.size(); }
};

/// Greedy colouring along the reversed degeneracy order. Each vertex sees at
/// most k already-coloured neighbours, so at most k+1 colours are used.
inline Coloring greedy_coloring(const Graph& g, const DegeneracyOrder& d) {
  if (!is_degeneracy_order(g, d)) throw InvalidArgument("not a degeneracy order of the graph");
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> colour(n, 0);  // 0 = uncoloured
  std::size_t used = 0;
  for (auto it = d.order.rbegin(); it != d.order.rend(); ++it) {
    const std::size_t i = g.index_of(*it);
    std::vector<bool> taken(used + 2, false);
    for (std::size_t j : g.neighbours_of_index(i)) taken[colour[j]] = true;
    std::size_t c = 1;
    while (taken[c]) ++c;
    colour[i] = c;
    used = std::max(used, c);
  }
  Coloring out;
  out.classes.resize(used);
  for (std::size_t i = 0; i < n; ++i) out.classes[colour[i] - 1].push_back(g.vertex_at(i));
  return out;
}

inline bool is_proper_coloring(const Graph& g, const Coloring& c) {
  std::vector<std::size_t> colour(g.vertex_count(), 0);
  std::size_t assigned = 0;
  for (std::size_t k = 0; k < c.classes.size(); ++k) {
    for (Vertex v : c.classes[k]) {
      if (!g.has_vertex(v) || colour[g.index_of(v)] != 0) return false;
      colour[g.index_of(v)] = k + 1;
      ++assigned;
    }
  }
  if (assigned != g.vertex_count()) return false;
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return colour[g.index_of(e.u)] != colour[g.index_of(e.v)];
  });
}

}  // namespace sepdim
