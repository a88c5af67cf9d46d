#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "sepdim/permutation.hpp"
#include "sepdim/precedence_search.hpp"
#include "sepdim/suitability.hpp"

namespace sepdim {

/// floor(log log n + 1/2 log log log n + log(sqrt(2) pi)), logs base 2,
/// i.e. Spencer's size bound with the o(1) term dropped. Zero for n < 3.
inline std::size_t spencer_target(std::size_t n) {
  if (n < 3) return 0;
  const double ll = std::log2(std::log2(static_cast<double>(n)));
  const double value = ll + 0.5 * std::log2(ll) + std::log2(std::sqrt(2.0) * std::numbers::pi);
  return value <= 0 ? 0 : static_cast<std::size_t>(std::floor(value));
}

struct ThreeSuitableFamily {
  PermutationFamily family;  // over ids 1..n
  std::string generator;     // "empty", "exact", "sampled" or "binary-code"
  std::uint64_t seed = 0;
};

namespace detail {

inline std::vector<Vertex> one_to_n(std::size_t n) {
  std::vector<Vertex> out(n);
  std::iota(out.begin(), out.end(), Vertex{1});
  return out;
}

inline CoverProblem three_suitable_problem(std::size_t n) {
  CoverProblem problem;
  problem.elements = n;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        if (b == a || c == a) continue;
        CoverRequirement req;
        req.options.push_back({{{static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(a)},
                                {static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(a)}}});
        problem.requirements.push_back(std::move(req));
      }
    }
  }
  return problem;
}

inline PermutationFamily family_over_one_to_n(std::size_t n,
                                              const std::vector<std::vector<std::size_t>>& orders) {
  PermutationFamily fam(one_to_n(n));
  for (const auto& order : orders) {
    std::vector<Vertex> ids;
    ids.reserve(order.size());
    for (auto i : order) ids.push_back(static_cast<Vertex>(i + 1));
    fam.add(Permutation(std::move(ids)));
  }
  return fam;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Orders [0, n) by x XOR mask for each mask in a 2-independent set of
// L-bit masks (L = bit width of n - 1): every two bit positions see all four
// value combinations across the masks. For distinct a, b, c let i and j be
// the leading bits where b and c differ from a; a mask that flips a's bits
// at i and j to 1 ranks b and c below a. The masks are the rows of the
// incidence matrix of all floor(N/2)-subsets of [N] containing 0, which are
// pairwise intersecting, non-nested and never cover [N].
inline std::vector<std::vector<std::size_t>> binary_code_orders(std::size_t n) {
  const std::size_t width = std::bit_width(n - 1);
  std::size_t rows = 3;
  while (binomial(rows - 1, rows / 2 - 1) < width) ++rows;

  std::vector<std::uint64_t> masks(rows, 0);
  std::vector<std::size_t> subset(rows / 2);
  std::iota(subset.begin(), subset.end(), std::size_t{0});
  for (std::size_t column = 0; column < width; ++column) {
    for (std::size_t r : subset) masks[r] |= std::uint64_t{1} << column;
    // Next subset containing 0, in lexicographic order over positions 1..
    std::size_t i = subset.size();
    while (i > 1 && subset[i - 1] == rows - subset.size() + i - 1) --i;
    if (i == 1) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < subset.size(); ++j) subset[j] = subset[j - 1] + 1;
  }

  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t m : masks) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [m](std::size_t a, std::size_t b) { return (a ^ m) < (b ^ m); });
    out.push_back(std::move(order));
  }
  return out;
}

// Random permutations, keeping per slot the best of `draws` candidates as
// long as it covers something new. Succeeds only if everything is covered
// within `target` permutations.
inline std::optional<std::vector<std::vector<std::size_t>>> sample_orders(
    std::size_t n, std::size_t target, std::size_t attempts, std::size_t draws,
    std::mt19937_64& rng) {
  // uncovered[a * n + b] bit c: constraint (a; {b, c}) still open.
  using Bits = boost::dynamic_bitset<>;
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    std::vector<Bits> uncovered(n * n, Bits(n));
    std::size_t open = 0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (b == a) continue;
        for (std::size_t c = 0; c < n; ++c) {
          if (c != a && c != b) uncovered[a * n + b].set(c);
        }
        open += uncovered[a * n + b].count();
      }
    }
    std::vector<std::vector<std::size_t>> chosen;
    while (open > 0 && chosen.size() < target) {
      std::vector<std::size_t> best;
      std::size_t best_gain = 0;
      for (std::size_t d = 0; d < draws; ++d) {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::shuffle(order.begin(), order.end(), rng);
        std::size_t gain = 0;
        Bits seen(n);
        for (std::size_t a : order) {
          for (std::size_t b = seen.find_first(); b != Bits::npos; b = seen.find_next(b)) {
            gain += (uncovered[a * n + b] & seen).count();
          }
          seen.set(a);
        }
        if (gain > best_gain) {
          best_gain = gain;
          best = std::move(order);
        }
      }
      if (best_gain == 0) break;
      Bits seen(n);
      for (std::size_t a : best) {
        for (std::size_t b = seen.find_first(); b != Bits::npos; b = seen.find_next(b)) {
          Bits hit = uncovered[a * n + b] & seen;
          open -= hit.count();
          uncovered[a * n + b] -= hit;
        }
        seen.set(a);
      }
      chosen.push_back(std::move(best));
    }
    if (open == 0) return chosen;
  }
  return std::nullopt;
}

}  // namespace detail

struct ExactThreeSuitable {
  std::size_t size = 0;
  PermutationFamily witness;
};

/// N(n, 3) by exact search; n <= 6.
inline ExactThreeSuitable exact_min_3_suitable(std::size_t n,
                                               std::uint64_t budget = kDefaultSearchBudget) {
  if (n > 6) throw BudgetExceeded("exact 3-suitable search is limited to n <= 6");
  const auto problem = detail::three_suitable_problem(n);
  auto solution = detail::minimum_cover(problem, 0, n * n, budget);
  if (!solution) throw VerificationFailure("no 3-suitable family found");
  std::vector<std::vector<std::size_t>> orders;
  for (const auto& o : solution->orders) orders.emplace_back(o.begin(), o.end());
  return {solution->slots, detail::family_over_one_to_n(n, orders)};
}

struct ThreeSuitableOptions {
  std::size_t sample_attempts = 16;
  std::size_t draws_per_slot = 32;
  std::size_t sample_max_n = 64;
};

/// A verified 3-suitable family over 1..n.
///
/// n <= 2 needs no permutations and n <= 5 is solved exactly. Larger n use
/// the binary-code family (about log log n + 1/2 log log log n members),
/// unless seeded random sampling finds a family no larger than
/// spencer_target(n) first; sampling is only tried when the binary code
/// misses that target and n <= sample_max_n.
inline ThreeSuitableFamily build_3_suitable(std::size_t n, std::uint64_t seed,
                                            const ThreeSuitableOptions& opts = {}) {
  if (n == 0) throw InvalidArgument("build_3_suitable needs n >= 1");
  ThreeSuitableFamily out;
  out.seed = seed;
  if (n <= 2) {
    out.family = PermutationFamily(detail::one_to_n(n));
    out.generator = "empty";
    return out;
  }
  if (n <= 5) {
    out.family = exact_min_3_suitable(n).witness;
    out.generator = "exact";
  } else {
    auto orders = detail::binary_code_orders(n);
    out.generator = "binary-code";
    const std::size_t target = spencer_target(n);
    if (target < orders.size() && n <= opts.sample_max_n) {
      std::mt19937_64 rng(seed);
      if (auto sampled =
              detail::sample_orders(n, target, opts.sample_attempts, opts.draws_per_slot, rng)) {
        orders = std::move(*sampled);
        out.generator = "sampled";
      }
    }
    out.family = detail::family_over_one_to_n(n, orders);
  }
  if (!verify_k_suitable(out.family, 3)) {
    throw VerificationFailure("constructed family is not 3-suitable for n = " + std::to_string(n));
  }
  return out;
}

}  // namespace sepdim
