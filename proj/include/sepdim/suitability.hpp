#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "sepdim/graph.hpp"
#include "sepdim/permutation.hpp"
#include "sepdim/precedence_search.hpp"

namespace sepdim {

inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

/// True iff both ends of one edge are ranked below both ends of the other.
inline bool separates(const Permutation& p, const Edge& e, const Edge& f) {
  if (!e.disjoint_from(f)) throw InvalidArgument("edges share a vertex");
  const auto eu = p.rank(e.u), ev = p.rank(e.v), fu = p.rank(f.u), fv = p.rank(f.v);
  return std::max(eu, ev) < std::min(fu, fv) || std::max(fu, fv) < std::min(eu, ev);
}

/// Result of a pairwise-suitability check: either every disjoint edge pair
/// is separated, or the first pair (in sorted edge order) that is not.
struct SeparationWitness {
  std::optional<std::pair<Edge, Edge>> counterexample;

  bool ok() const noexcept { return !counterexample.has_value(); }
};

namespace detail {

// Rank tables indexed by dense ground-set index, one per member.
inline std::vector<std::vector<std::uint32_t>> rank_tables(const PermutationFamily& fam) {
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(fam.size());
  for (const auto& p : fam.members()) out.push_back(p.ranks_over(fam.ground_set()));
  return out;
}

inline bool pair_separated(const std::vector<std::vector<std::uint32_t>>& ranks, std::size_t eu,
                           std::size_t ev, std::size_t fu, std::size_t fv) {
  for (const auto& r : ranks) {
    if (std::max(r[eu], r[ev]) < std::min(r[fu], r[fv]) ||
        std::max(r[fu], r[fv]) < std::min(r[eu], r[ev])) {
      return true;
    }
  }
  return false;
}

inline void require_same_ground(const PermutationFamily& fam, const Graph& g) {
  if (!std::equal(fam.ground_set().begin(), fam.ground_set().end(), g.vertices().begin(),
                  g.vertices().end())) {
    throw InvalidArgument("family ground set does not match the graph's vertex set");
  }
}

}  // namespace detail

/// Exhaustive check over all pairs of disjoint edges.
inline SeparationWitness verify_pairwise_suitable(const PermutationFamily& fam, const Graph& g) {
  detail::require_same_ground(fam, g);
  const auto ranks = detail::rank_tables(fam);
  const auto edges = g.edges();
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  idx.reserve(edges.size());
  for (const Edge& e : edges) idx.emplace_back(g.index_of(e.u), g.index_of(e.v));

  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (!edges[i].disjoint_from(edges[j])) continue;
      if (!detail::pair_separated(ranks, idx[i].first, idx[i].second, idx[j].first,
                                  idx[j].second)) {
        return {std::make_pair(edges[i], edges[j])};
      }
    }
  }
  return {};
}

/// Checks `samples` uniformly drawn disjoint edge pairs. Gives up drawing
/// after 32 * samples attempts, which only matters for graphs where almost
/// all edge pairs share a vertex.
inline SeparationWitness verify_pairwise_suitable_sampled(const PermutationFamily& fam,
                                                          const Graph& g, std::size_t samples,
                                                          std::uint64_t seed) {
  detail::require_same_ground(fam, g);
  const auto edges = g.edges();
  if (edges.size() < 2) return {};
  const auto ranks = detail::rank_tables(fam);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  std::size_t checked = 0;
  for (std::size_t attempt = 0; checked < samples && attempt < 32 * samples; ++attempt) {
    std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    if (i == j || !edges[i].disjoint_from(edges[j])) continue;
    if (i > j) std::swap(i, j);
    ++checked;
    if (!detail::pair_separated(ranks, g.index_of(edges[i].u), g.index_of(edges[i].v),
                                g.index_of(edges[j].u), g.index_of(edges[j].v))) {
      return {std::make_pair(edges[i], edges[j])};
    }
  }
  return {};
}

/// Dushnik k-suitability: for every k-set A and a in A, some member ranks
/// all of A \ {a} before a. Vacuously true for k <= 1 or k > |ground set|.
inline bool verify_k_suitable(const PermutationFamily& fam, std::size_t k) {
  const std::size_t n = fam.ground_set().size();
  if (k <= 1 || k > n) return true;
  if (fam.empty()) return false;

  using Bits = boost::dynamic_bitset<>;
  // before[m][a]: elements ranked below a in member m.
  std::vector<std::vector<Bits>> before(fam.size(), std::vector<Bits>(n, Bits(n)));
  for (std::size_t m = 0; m < fam.size(); ++m) {
    const auto order = fam[m].order();
    Bits seen(n);
    for (Vertex v : order) {
      const auto a = static_cast<std::size_t>(
          std::lower_bound(fam.ground_set().begin(), fam.ground_set().end(), v) -
          fam.ground_set().begin());
      before[m][a] = seen;
      seen.set(a);
    }
  }

  // Chooses the members of A \ {a} in increasing index order, narrowing the
  // set of members that still rank everything chosen so far below a. The
  // last element is checked for all candidates at once with a union.
  auto search = [&](auto&& self, std::size_t a, std::size_t start, std::size_t chosen,
                    const std::vector<std::size_t>& alive) -> bool {
    if (chosen + 1 == k - 1) {
      Bits covered(n);
      for (std::size_t m : alive) covered |= before[m][a];
      for (std::size_t c = start; c < n; ++c) {
        if (c != a && !covered.test(c)) return false;
      }
      return true;
    }
    const std::size_t still_needed = (k - 1) - chosen;
    std::vector<std::size_t> next;
    for (std::size_t c = start; c < n; ++c) {
      if (c == a) continue;
      const std::size_t remaining_after = (n - c - 1) - (a > c ? 1 : 0);
      if (remaining_after < still_needed - 1) break;
      next.clear();
      for (std::size_t m : alive) {
        if (before[m][a].test(c)) next.push_back(m);
      }
      if (next.empty()) return false;
      if (!self(self, a, c + 1, chosen + 1, next)) return false;
    }
    return true;
  };

  std::vector<std::size_t> all(fam.size());
  for (std::size_t m = 0; m < all.size(); ++m) all[m] = m;
  for (std::size_t a = 0; a < n; ++a) {
    if (!search(search, a, 0, 0, all)) return false;
  }
  return true;
}

using Point = std::vector<double>;
using Embedding = std::map<Vertex, Point>;

/// Coordinate i of v is v's rank in member i.
inline Embedding embedding_from_family(const PermutationFamily& fam) {
  if (fam.empty()) throw InvalidArgument("cannot embed with an empty family");
  Embedding out;
  for (Vertex v : fam.ground_set()) {
    Point p;
    p.reserve(fam.size());
    for (const auto& m : fam.members()) p.push_back(static_cast<double>(m.rank(v)));
    out.emplace(v, std::move(p));
  }
  return out;
}

/// Member i reads the vertices along axis i; equal coordinates are broken by
/// vertex id.
inline PermutationFamily family_from_embedding(const Embedding& points) {
  if (points.empty()) return PermutationFamily{};
  const std::size_t d = points.begin()->second.size();
  if (d == 0) throw InvalidArgument("embedding dimension must be at least 1");
  std::vector<Vertex> ground;
  for (const auto& [v, p] : points) {
    if (p.size() != d) throw InvalidArgument("embedding has inconsistent dimensions");
    ground.push_back(v);
  }
  PermutationFamily fam(ground);
  for (std::size_t axis = 0; axis < d; ++axis) {
    std::vector<Vertex> order = ground;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      return points.at(a)[axis] < points.at(b)[axis];
    });
    fam.add(Permutation(std::move(order)));
  }
  return fam;
}

/// Exact separation dimension with a witness family.
struct SeparationDimension {
  std::optional<std::size_t> value;  // empty when no family of size <= limit exists
  PermutationFamily witness;
  std::uint64_t nodes = 0;
};

namespace detail {

inline CoverProblem separation_problem(const Graph& g) {
  CoverProblem problem;
  problem.elements = g.vertex_count();
  problem.reversal_symmetric = true;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (!edges[i].disjoint_from(edges[j])) continue;
      const auto a = static_cast<std::uint8_t>(g.index_of(edges[i].u));
      const auto b = static_cast<std::uint8_t>(g.index_of(edges[i].v));
      const auto c = static_cast<std::uint8_t>(g.index_of(edges[j].u));
      const auto d = static_cast<std::uint8_t>(g.index_of(edges[j].v));
      CoverRequirement req;
      req.options.push_back({{{a, c}, {a, d}, {b, c}, {b, d}}});
      req.options.push_back({{{c, a}, {c, b}, {d, a}, {d, b}}});
      problem.requirements.push_back(std::move(req));
    }
  }
  return problem;
}

inline PermutationFamily family_from_orders(const Graph& g,
                                            const std::vector<std::vector<std::uint8_t>>& orders) {
  PermutationFamily fam(std::vector<Vertex>(g.vertices().begin(), g.vertices().end()));
  for (const auto& order : orders) {
    std::vector<Vertex> ids;
    ids.reserve(order.size());
    for (auto i : order) ids.push_back(g.vertex_at(i));
    fam.add(Permutation(std::move(ids)));
  }
  return fam;
}

}  // namespace detail

/// Smallest t <= limit admitting a pairwise-suitable family, by iterative
/// deepening over t. Each candidate permutation is grown as a partial order
/// from the precedences needed to separate the pairs assigned to it.
/// Throws BudgetExceeded when more than `budget` search nodes are needed or
/// the graph has more than 64 vertices.
inline SeparationDimension exact_separation_dimension(
    const Graph& g, std::size_t limit, std::uint64_t budget = kDefaultSearchBudget) {
  const auto problem = detail::separation_problem(g);
  detail::CoverSearch search(problem, budget);
  SeparationDimension out;
  for (std::size_t t = 0; t <= limit; ++t) {
    if (auto orders = search.solve(t)) {
      out.value = t;
      out.witness = detail::family_from_orders(g, *orders);
      break;
    }
  }
  out.nodes = search.nodes();
  return out;
}

}  // namespace sepdim
