#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "sepdim/interval_order.hpp"
#include "sepdim/permutation.hpp"
#include "sepdim/poset.hpp"
#include "sepdim/subdivision.hpp"
#include "sepdim/suitability.hpp"

namespace sepdim {

struct MonotoneRun {
  std::vector<std::size_t> indices;  // positions into the input sequence, ascending
  bool increasing = true;
};

namespace detail {

// Patience sorting: indices of one longest strictly increasing subsequence.
template <class Less>
std::vector<std::size_t> longest_chain(const std::vector<std::size_t>& seq, Less less) {
  std::vector<std::size_t> tails;  // tails[len-1] = index ending the best run of length len
  std::vector<std::size_t> parent(seq.size(), seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    auto it = std::lower_bound(tails.begin(), tails.end(), i, [&](std::size_t t, std::size_t cur) {
      return less(seq[t], seq[cur]);
    });
    if (it != tails.begin()) parent[i] = *(it - 1);
    if (it == tails.end()) {
      tails.push_back(i);
    } else {
      *it = i;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = tails.empty() ? seq.size() : tails.back(); i < seq.size(); i = parent[i]) {
    out.push_back(i);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Longest monotone subsequence of distinct values; an increasing run wins
/// ties with a decreasing one.
inline MonotoneRun longest_monotone_subsequence(const std::vector<std::size_t>& seq) {
  auto inc = detail::longest_chain(seq, std::less<>{});
  auto dec = detail::longest_chain(seq, std::greater<>{});
  if (dec.size() > inc.size()) return {std::move(dec), false};
  return {std::move(inc), true};
}

/// A vertex subset that every member orders either exactly like member 0 or
/// exactly in reverse.
struct MonotoneSubset {
  std::vector<Vertex> vertices;  // in member 0's order
  std::vector<bool> reversed;    // per member
};

/// Member 0 fixes the reference order of `target`; each later member keeps
/// only a longest monotone subsequence of the current set.
inline MonotoneSubset common_monotone_subset(const PermutationFamily& fam,
                                             std::vector<Vertex> target) {
  if (fam.empty()) throw InvalidArgument("common_monotone_subset needs a nonempty family");
  const auto& ref = fam[0];
  std::sort(target.begin(), target.end(),
            [&](Vertex a, Vertex b) { return ref.rank(a) < ref.rank(b); });
  MonotoneSubset out;
  out.vertices = std::move(target);
  out.reversed.assign(fam.size(), false);
  for (std::size_t m = 1; m < fam.size(); ++m) {
    std::vector<std::size_t> ranks;
    ranks.reserve(out.vertices.size());
    for (Vertex v : out.vertices) ranks.push_back(fam[m].rank(v));
    const auto run = longest_monotone_subsequence(ranks);
    std::vector<Vertex> kept;
    kept.reserve(run.indices.size());
    for (std::size_t i : run.indices) kept.push_back(out.vertices[i]);
    out.vertices = std::move(kept);
    out.reversed[m] = !run.increasing;
  }
  // A single surviving vertex is trivially in order for everyone.
  if (out.vertices.size() < 2) std::fill(out.reversed.begin(), out.reversed.end(), false);
  return out;
}

/// floor((m - 1)^(1 / 2^(r - 1))) + 1, the size guaranteed by repeated
/// Erdős–Szekeres extraction from m elements under r permutations.
inline std::size_t monotone_subset_guarantee(std::size_t m, std::size_t r) {
  if (m == 0) return 0;
  if (r <= 1) return m;
  std::size_t s = m - 1;
  for (std::size_t i = 1; i < r; ++i) {
    auto root = static_cast<std::size_t>(std::sqrt(static_cast<double>(s)));
    while (root * root > s) --root;
    while ((root + 1) * (root + 1) <= s) ++root;
    s = root;
  }
  return s + 1;
}

/// True iff each member restricted to `subset` is member 0's order or its
/// reverse, as recorded.
inline bool is_common_monotone(const PermutationFamily& fam, const MonotoneSubset& subset) {
  for (std::size_t m = 0; m < fam.size(); ++m) {
    for (std::size_t i = 1; i < subset.vertices.size(); ++i) {
      const bool up = fam[m].rank(subset.vertices[i - 1]) < fam[m].rank(subset.vertices[i]);
      if (up == subset.reversed[m] ) return false;
    }
  }
  return true;
}

namespace detail {

inline Permutation move_next_to(const Permutation& p, Vertex moving, Vertex anchor, bool before) {
  std::vector<Vertex> order;
  order.reserve(p.size());
  for (Vertex v : p.order()) {
    if (v == moving) continue;
    if (v == anchor && before) order.push_back(moving);
    order.push_back(v);
    if (v == anchor && !before) order.push_back(moving);
  }
  return Permutation(std::move(order));
}

}  // namespace detail

/// Reverses members so that `chain` (original vertices, in reference order)
/// increases everywhere, then moves each middle vertex u of two chain
/// vertices v_i, v_j (i < j) that lies outside them next to the nearer end:
/// after v_j it becomes v_j's immediate predecessor, before v_i it becomes
/// v_i's immediate successor. The result is re-verified against `half`.
inline PermutationFamily normalize_lower_bound_family(const PermutationFamily& fam,
                                                      const std::vector<Vertex>& chain,
                                                      const Graph& half,
                                                      const SubdivisionMap& map) {
  PermutationFamily out(std::vector<Vertex>(fam.ground_set().begin(), fam.ground_set().end()));
  for (const auto& member : fam.members()) {
    Permutation p = member;
    if (chain.size() >= 2 && p.rank(chain.front()) > p.rank(chain.back())) p = p.reversed();
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      if (p.rank(chain[i]) > p.rank(chain[i + 1])) {
        throw InvalidArgument("chain is not monotone in every member");
      }
    }
    for (std::size_t i = 0; i < chain.size(); ++i) {
      for (std::size_t j = i + 1; j < chain.size(); ++j) {
        const Vertex u = map.mid_of(chain[i], chain[j]);
        if (p.rank(u) > p.rank(chain[j])) {
          p = detail::move_next_to(p, u, chain[j], true);
        } else if (p.rank(u) < p.rank(chain[i])) {
          p = detail::move_next_to(p, u, chain[i], false);
        }
      }
    }
    out.add(std::move(p));
  }
  if (!verify_pairwise_suitable(out, half).ok()) {
    throw VerificationFailure("normalisation broke pairwise suitability");
  }
  return out;
}

/// One extension of C_p per member: intervals (i, j) ordered by the rank of
/// the middle vertex of chain[i-1], chain[j-1]. Elements are indexed as in
/// canonical_interval_order(p). Throws VerificationFailure if the result is
/// not a realizer, which means the family was not normalised.
inline Realizer extract_realizer(const PermutationFamily& fam, const std::vector<Vertex>& chain,
                                 const SubdivisionMap& map) {
  const std::size_t p = chain.size();
  if (p < 2) throw InvalidArgument("extract_realizer needs at least two chain vertices");
  const auto cp = canonical_interval_order(p);
  Realizer out;
  for (const auto& member : fam.members()) {
    std::vector<std::pair<std::size_t, std::size_t>> keyed;
    for (std::size_t e = 0; e < cp.size(); ++e) {
      const auto [i, j] = cp.intervals[e];
      keyed.emplace_back(member.rank(map.mid_of(chain[i - 1], chain[j - 1])), e);
    }
    std::sort(keyed.begin(), keyed.end());
    LinearExtension ext;
    for (auto [rank, e] : keyed) ext.push_back(e);
    out.extensions.push_back(std::move(ext));
  }
  if (!is_realizer(out, cp.order)) {
    throw VerificationFailure("extracted orders do not realise the canonical interval order");
  }
  return out;
}

}  // namespace sepdim
