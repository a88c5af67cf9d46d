#pragma once

// Exact search for a small number of linear orders that jointly satisfy a
// list of precedence requirements. The separation-dimension, 3-suitable and
// poset-dimension solvers are all phrased as instances of this problem:
//
//   given t slots (each a strict partial order over at most 64 elements,
//   seeded with a common base order) and a list of requirements, each of
//   which is a disjunction of options (a set of "x before y" pairs), find an
//   assignment that makes every requirement hold in at least one slot.
//
// Each slot's partial order is turned into a linear order at the end, so any
// option satisfied by a slot is also satisfied by the emitted permutation.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "sepdim/error.hpp"

namespace sepdim::detail {

using Mask = std::uint64_t;

inline constexpr std::size_t kMaxSearchElements = 64;

struct Precedence {
  std::uint8_t before = 0;
  std::uint8_t after = 0;
};

struct CoverOption {
  std::vector<Precedence> pairs;
};

struct CoverRequirement {
  std::vector<CoverOption> options;
};

struct CoverProblem {
  std::size_t elements = 0;
  std::vector<Precedence> base;
  std::vector<CoverRequirement> requirements;
  // Set when the base is empty and every requirement's option list is closed
  // under reversing all pairs. Then the first option placed in a fresh slot
  // can be fixed, since reversing that slot maps solutions to solutions.
  bool reversal_symmetric = false;
};

/// Transitively closed strict partial order on up to 64 elements.
class ClosedOrder {
 public:
  bool holds(std::size_t x, std::size_t y) const noexcept { return (succ_[x] >> y) & 1U; }

  bool compatible(std::size_t x, std::size_t y) const noexcept {
    return x != y && !holds(y, x);
  }

  /// Adds x < y and closes transitively. Returns false (leaving the order
  /// untouched) if that would create a cycle.
  bool add(std::size_t x, std::size_t y) noexcept {
    if (holds(x, y)) return true;
    if (!compatible(x, y)) return false;
    const Mask lower = pred_[x] | bit(x);
    const Mask upper = succ_[y] | bit(y);
    for (Mask m = lower; m; m &= m - 1) succ_[std::countr_zero(m)] |= upper;
    for (Mask m = upper; m; m &= m - 1) pred_[std::countr_zero(m)] |= lower;
    return true;
  }

  /// Lexicographically smallest linear extension of the first `n` elements.
  std::vector<std::uint8_t> linearize(std::size_t n) const {
    std::vector<std::uint8_t> out;
    out.reserve(n);
    Mask placed = 0;
    while (out.size() < n) {
      for (std::size_t x = 0; x < n; ++x) {
        if (!((placed >> x) & 1U) && (pred_[x] & ~placed) == 0) {
          out.push_back(static_cast<std::uint8_t>(x));
          placed |= bit(x);
          break;
        }
      }
    }
    return out;
  }

 private:
  static constexpr Mask bit(std::size_t x) noexcept { return Mask{1} << x; }

  std::array<Mask, kMaxSearchElements> succ_{};
  std::array<Mask, kMaxSearchElements> pred_{};
};

/// Depth-first search with most-constrained-requirement branching. Throws
/// BudgetExceeded once more than `budget` nodes have been expanded in total
/// (the counter is shared across calls so iterative deepening is capped as
/// a whole).
class CoverSearch {
 public:
  CoverSearch(const CoverProblem& problem, std::uint64_t budget)
      : problem_(problem), budget_(budget) {
    if (problem.elements > kMaxSearchElements) {
      throw BudgetExceeded("exact search supports at most 64 elements, got " +
                           std::to_string(problem.elements));
    }
    for (const Precedence& p : problem.base) {
      if (!base_.add(p.before, p.after)) throw InvalidArgument("base relation is cyclic");
    }
  }

  /// Tries to satisfy every requirement with `slots` linear orders.
  std::optional<std::vector<std::vector<std::uint8_t>>> solve(std::size_t slots) {
    if (slots == 0) {
      if (!problem_.requirements.empty()) return std::nullopt;
      return std::vector<std::vector<std::uint8_t>>{};
    }
    orders_.assign(slots, base_);
    touched_.assign(slots, false);
    if (!dfs()) return std::nullopt;
    std::vector<std::vector<std::uint8_t>> out;
    out.reserve(slots);
    for (const auto& o : orders_) out.push_back(o.linearize(problem_.elements));
    return out;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  bool option_holds(const ClosedOrder& o, const CoverOption& opt) const {
    for (const Precedence& p : opt.pairs) {
      if (!o.holds(p.before, p.after)) return false;
    }
    return true;
  }

  bool option_viable(const ClosedOrder& o, const CoverOption& opt) const {
    for (const Precedence& p : opt.pairs) {
      if (!o.compatible(p.before, p.after)) return false;
    }
    return true;
  }

  // Appends the (slot, option) branches worth trying for requirement `r`.
  // Only the first untouched slot is considered, since untouched slots are
  // interchangeable.
  void branches(const CoverRequirement& r, std::vector<std::pair<std::size_t, std::size_t>>& out,
                bool& satisfied) const {
    out.clear();
    satisfied = false;
    bool fresh_seen = false;
    for (std::size_t s = 0; s < orders_.size(); ++s) {
      if (!touched_[s]) {
        if (fresh_seen) continue;
        fresh_seen = true;
      }
      for (std::size_t k = 0; k < r.options.size(); ++k) {
        if (option_holds(orders_[s], r.options[k])) {
          satisfied = true;
          return;
        }
        if (option_viable(orders_[s], r.options[k])) {
          out.emplace_back(s, k);
          if (!touched_[s] && problem_.reversal_symmetric) break;
        }
      }
    }
  }

  bool dfs() {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("exact search exceeded its budget of " + std::to_string(budget_) +
                           " nodes");
    }
    std::vector<std::pair<std::size_t, std::size_t>> best;
    std::vector<std::pair<std::size_t, std::size_t>> scratch;
    std::size_t best_req = problem_.requirements.size();
    for (std::size_t i = 0; i < problem_.requirements.size(); ++i) {
      bool satisfied = false;
      branches(problem_.requirements[i], scratch, satisfied);
      if (satisfied) continue;
      if (best_req == problem_.requirements.size() || scratch.size() < best.size()) {
        best.swap(scratch);
        best_req = i;
        if (best.empty()) return false;
      }
    }
    if (best_req == problem_.requirements.size()) return true;

    const auto& req = problem_.requirements[best_req];
    for (auto [s, k] : best) {
      const ClosedOrder saved = orders_[s];
      const bool was_touched = touched_[s];
      bool ok = true;
      for (const Precedence& p : req.options[k].pairs) {
        if (!orders_[s].add(p.before, p.after)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        touched_[s] = true;
        if (dfs()) return true;
      }
      orders_[s] = saved;
      touched_[s] = was_touched;
    }
    return false;
  }

  const CoverProblem& problem_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  ClosedOrder base_;
  std::vector<ClosedOrder> orders_;
  std::vector<bool> touched_;
};

struct CoverSolution {
  std::size_t slots = 0;
  std::vector<std::vector<std::uint8_t>> orders;
};

/// Smallest t in [first, limit] for which the problem is solvable, or
/// nullopt when none is.
inline std::optional<CoverSolution> minimum_cover(const CoverProblem& problem, std::size_t first,
                                                  std::size_t limit, std::uint64_t budget) {
  CoverSearch search(problem, budget);
  for (std::size_t t = first; t <= limit; ++t) {
    if (auto orders = search.solve(t)) return CoverSolution{t, std::move(*orders)};
  }
  return std::nullopt;
}

}  // namespace sepdim::detail
