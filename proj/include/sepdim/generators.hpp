#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "sepdim/graph.hpp"

namespace sepdim {

/// K_n on ids 1..n.
inline Graph complete_graph(std::size_t n) {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (Vertex i = 1; i <= n; ++i) {
    vs.push_back(i);
    for (Vertex j = i + 1; j <= n; ++j) es.emplace_back(i, j);
  }
  return Graph(vs, es);
}

/// Path 1-2-...-n.
inline Graph path_graph(std::size_t n) {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (Vertex i = 1; i <= n; ++i) {
    vs.push_back(i);
    if (i > 1) es.emplace_back(i - 1, i);
  }
  return Graph(vs, es);
}

/// Cycle 1-2-...-n-1, n >= 3.
inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex i = 1; i < n; ++i) es.emplace_back(i, i + 1);
  es.emplace_back(static_cast<Vertex>(n), 1);
  return Graph::from_edges(es);
}

/// K_{1,leaves}: centre 1, leaves 2..leaves+1.
inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> es;
  for (Vertex i = 2; i <= leaves + 1; ++i) es.emplace_back(1, i);
  return Graph({1}, es);
}

/// Vertices 0..n-1 added in order; each picks min(k, i) distinct earlier
/// neighbours uniformly at random. The result is k-degenerate.
inline Graph random_degenerate_graph(std::size_t n, std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vertex> vs(n);
  std::vector<Edge> es;
  std::vector<Vertex> earlier;
  for (Vertex i = 0; i < n; ++i) {
    vs[i] = i;
    const std::size_t want = std::min<std::size_t>(k, i);
    earlier.resize(i);
    for (Vertex j = 0; j < i; ++j) earlier[j] = j;
    // Partial Fisher-Yates: the first `want` slots become a uniform sample.
    for (std::size_t s = 0; s < want; ++s) {
      std::uniform_int_distribution<std::size_t> pick(s, earlier.size() - 1);
      std::swap(earlier[s], earlier[pick(rng)]);
      es.emplace_back(earlier[s], i);
    }
  }
  return Graph(vs, es);
}

/// G(n, p) on ids 0..n-1.
inline Graph random_gnp_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Vertex> vs(n);
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) {
    vs[i] = i;
    for (Vertex j = 0; j < i; ++j) {
      if (coin(rng)) es.emplace_back(j, i);
    }
  }
  return Graph(vs, es);
}

}  // namespace sepdim
