#pragma once

#include <cmath>
#include <optional>

#include "sepdim/generators.hpp"
#include "sepdim/lower_bound.hpp"
#include "sepdim/subdivision_cover.hpp"

namespace sepdim {

/// Everything the lower-bound pipeline learns about K_n^{1/2}.
struct LowerBoundRun {
  std::size_t n = 0;
  std::size_t construction_size = 0;   // size of the upper-bound construction
  std::optional<std::size_t> pi;       // exact separation dimension, if computed
  PermutationFamily optimal;           // witness for pi
  MonotoneSubset subset;               // common monotone original vertices
  std::size_t guaranteed_subset = 0;   // monotone_subset_guarantee(n, pi)
  PermutationFamily normalized;
  Realizer realizer;                   // of C_p, p = subset size
  std::optional<std::size_t> dim_cp;   // exact dim(C_p)
  bool realizer_valid = false;
};

/// 1/2 * floor(log log (n - 1)), logs base 2; 0 when undefined.
inline double subdivided_clique_lower_bound(std::size_t n) {
  if (n < 3) return 0.0;
  const double l = std::log2(static_cast<double>(n - 1));
  if (l <= 1.0) return 0.0;
  return 0.5 * std::floor(std::log2(l));
}

/// Exact family on K_n^{1/2}, then monotone extraction, normalisation and
/// realizer extraction. Throws BudgetExceeded from the exact stage when n is
/// above `max_exact_n` or the search runs out of budget; callers that only
/// want the construction can read `construction_size` from
/// theorem3_family(complete_graph(n), seed) directly.
inline LowerBoundRun run_lower_bound_harness(std::size_t n, std::uint64_t budget,
                                             std::size_t max_exact_n = 4) {
  LowerBoundRun run;
  run.n = n;
  const Graph kn = complete_graph(n);
  const auto cover = theorem3_family(kn, 0);
  run.construction_size = cover.family.size();
  if (n > max_exact_n) {
    throw BudgetExceeded("exact stage of the lower-bound harness is limited to n <= " +
                         std::to_string(max_exact_n));
  }

  const auto exact = exact_separation_dimension(cover.subdivided, cover.family.size(), budget);
  if (!exact.value) throw VerificationFailure("construction smaller than the exact optimum");
  run.pi = exact.value;
  run.optimal = exact.witness;
  if (*run.pi == 0) return run;

  std::vector<Vertex> originals(kn.vertices().begin(), kn.vertices().end());
  run.subset = common_monotone_subset(run.optimal, originals);
  run.guaranteed_subset = monotone_subset_guarantee(n, *run.pi);
  run.normalized =
      normalize_lower_bound_family(run.optimal, run.subset.vertices, cover.subdivided, cover.map);
  const std::size_t p = run.subset.vertices.size();
  if (p >= 2) {
    run.realizer = extract_realizer(run.normalized, run.subset.vertices, cover.map);
    run.realizer_valid = is_realizer(run.realizer, canonical_interval_order(p).order);
    run.dim_cp = exact_poset_dimension(canonical_interval_order(p).order, *run.pi, budget).value;
  }
  return run;
}

}  // namespace sepdim
