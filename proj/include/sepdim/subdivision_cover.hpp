#pragma once

#include <algorithm>
#include <vector>

#include "sepdim/degeneracy.hpp"
#include "sepdim/interval_order.hpp"
#include "sepdim/permutation.hpp"
#include "sepdim/poset.hpp"
#include "sepdim/subdivision.hpp"
#include "sepdim/suitability.hpp"

namespace sepdim {

/// Builds |r| + 2 permutations of V(G^{1/2}) from a realizer r of
/// C_{G,sigma}. In what follows v_1..v_n are the original vertices in sigma
/// order and u_ij the middle vertex of edge {v_i, v_j}, i < j.
///
/// For each extension L the middle vertices are laid out in L order, then
/// each v_j is inserted at the leftmost slot after v_{j-1} and every u_ij.
/// Two more permutations keep v_1..v_n in order and put each u_ij right
/// after v_i, respectively right before v_j.
inline PermutationFamily subdivision_family(const Graph& g, const Permutation& sigma,
                                            const Realizer& r) {
  const auto [half, map] = subdivide(g);
  const auto c = interval_order_from(g, sigma);
  if (!is_realizer(r, c.order)) throw InvalidArgument("not a realizer of the interval order");

  const std::size_t n = g.vertex_count();
  const auto by_rank = sigma.order();  // by_rank[i - 1] = v_i
  std::vector<Vertex> mid(c.size());
  for (std::size_t e = 0; e < c.size(); ++e) {
    const auto [i, j] = c.intervals[e];
    mid[e] = map.mid_of(by_rank[i - 1], by_rank[j - 1]);
  }
  // Elements grouped by their left and right endpoints.
  std::vector<std::vector<std::size_t>> starting_at(n + 1);
  std::vector<std::vector<std::size_t>> ending_at(n + 1);
  for (std::size_t e = 0; e < c.size(); ++e) {
    starting_at[c.intervals[e].first].push_back(e);
    ending_at[c.intervals[e].second].push_back(e);
  }

  PermutationFamily fam(std::vector<Vertex>(half.vertices().begin(), half.vertices().end()));
  for (const auto& ext : r.extensions) {
    std::vector<std::size_t> pos(c.size());
    for (std::size_t t = 0; t < ext.size(); ++t) pos[ext[t]] = t;

    // v_j goes right after the middle vertex at position after[j] (-1: front).
    std::vector<long> after(n + 1, -1);
    for (std::size_t j = 1; j <= n; ++j) {
      long slot = j > 1 ? after[j - 1] : -1;
      for (std::size_t e : ending_at[j]) slot = std::max(slot, static_cast<long>(pos[e]));
      after[j] = slot;
      for (std::size_t e : starting_at[j]) {
        if (static_cast<long>(pos[e]) <= slot) {
          throw VerificationFailure("original vertex placed after one of its right edges");
        }
      }
    }
    std::vector<Vertex> order;
    order.reserve(n + c.size());
    std::size_t j = 1;
    for (; j <= n && after[j] == -1; ++j) order.push_back(by_rank[j - 1]);
    for (std::size_t t = 0; t < ext.size(); ++t) {
      order.push_back(mid[ext[t]]);
      for (; j <= n && after[j] == static_cast<long>(t); ++j) order.push_back(by_rank[j - 1]);
    }
    fam.add(Permutation(std::move(order)));
  }

  std::vector<Vertex> left_first;
  std::vector<Vertex> right_first;
  for (std::size_t j = 1; j <= n; ++j) {
    // Elements are sorted lexicographically, so these lists are already in
    // order of the far endpoint.
    for (std::size_t e : ending_at[j]) right_first.push_back(mid[e]);
    right_first.push_back(by_rank[j - 1]);
    left_first.push_back(by_rank[j - 1]);
    for (std::size_t e : starting_at[j]) left_first.push_back(mid[e]);
  }
  fam.add(Permutation(std::move(left_first)));
  fam.add(Permutation(std::move(right_first)));

  if (!verify_pairwise_suitable(fam, half).ok()) {
    throw VerificationFailure("subdivision family is not pairwise suitable");
  }
  return fam;
}

struct SubdivisionCover {
  PermutationFamily family;
  Graph subdivided;
  SubdivisionMap map;
  Permutation sigma;
  std::size_t colours = 0;
  std::size_t height = 0;
  Realizer realizer;
  bool exact_realizer = false;
  std::uint64_t seed = 0;
};

struct SubdivisionCoverOptions {
  std::size_t exact_max_elements = 16;
  std::uint64_t exact_budget = 2'000'000;
};

/// Orders the colour classes of a greedy colouring consecutively, so the
/// interval order has height below the number of colours, finds a realizer
/// (exactly when small enough, otherwise heuristically) and applies
/// subdivision_family. A graph without edges gets the empty family.
inline SubdivisionCover theorem3_family(const Graph& g, std::uint64_t seed,
                                        const SubdivisionCoverOptions& opts = {}) {
  SubdivisionCover out;
  out.seed = seed;
  auto [half, map] = subdivide(g);
  out.subdivided = std::move(half);
  out.map = std::move(map);
  out.family = PermutationFamily(
      std::vector<Vertex>(out.subdivided.vertices().begin(), out.subdivided.vertices().end()));
  if (g.edge_count() == 0) return out;

  const auto colouring = greedy_coloring(g, degeneracy_order(g));
  out.colours = colouring.size();
  std::vector<Vertex> order;
  for (const auto& cls : colouring.classes) order.insert(order.end(), cls.begin(), cls.end());
  out.sigma = Permutation(std::move(order));

  const auto c = interval_order_from(g, out.sigma);
  out.height = height(c.order);
  if (out.height + 1 > out.colours) {
    throw VerificationFailure("interval order is taller than the colouring allows");
  }

  out.realizer = realizer_heuristic(c);
  if (c.size() <= opts.exact_max_elements) {
    try {
      auto exact = exact_poset_dimension(c.order, out.realizer.size(), opts.exact_budget);
      if (exact.value) {
        out.realizer = std::move(exact.witness);
        out.exact_realizer = true;
      }
    } catch (const BudgetExceeded&) {
      // keep the heuristic realizer
    }
  }
  out.family = subdivision_family(g, out.sigma, out.realizer);
  return out;
}

}  // namespace sepdim
