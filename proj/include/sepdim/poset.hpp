#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "sepdim/error.hpp"
#include "sepdim/precedence_search.hpp"

namespace sepdim {

/// Strict partial order on elements 0..size()-1.
class Poset {
 public:
  Poset() = default;

  /// `relation` must already be irreflexive and transitive; throws
  /// InvalidArgument otherwise.
  Poset(std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& relation)
      : less_(size, boost::dynamic_bitset<>(size)) {
    for (auto [x, y] : relation) {
      if (x >= size || y >= size) throw InvalidArgument("relation names an unknown element");
      if (x == y) throw InvalidArgument("relation is not irreflexive");
      less_[x].set(y);
    }
    for (std::size_t x = 0; x < size; ++x) {
      for (std::size_t y = less_[x].find_first(); y != boost::dynamic_bitset<>::npos;
           y = less_[x].find_next(y)) {
        if (!less_[y].is_subset_of(less_[x])) throw InvalidArgument("relation is not transitive");
        if (less_[y].test(x)) throw InvalidArgument("relation is not antisymmetric");
      }
    }
  }

  /// Transitive closure of `relation`; throws InvalidArgument on cycles.
  static Poset closure_of(std::size_t size,
                          const std::vector<std::pair<std::size_t, std::size_t>>& relation) {
    std::vector<boost::dynamic_bitset<>> less(size, boost::dynamic_bitset<>(size));
    for (auto [x, y] : relation) less.at(x).set(y);
    // Warshall over bit rows.
    for (std::size_t k = 0; k < size; ++k) {
      for (std::size_t x = 0; x < size; ++x) {
        if (less[x].test(k)) less[x] |= less[k];
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> closed;
    for (std::size_t x = 0; x < size; ++x) {
      for (std::size_t y = less[x].find_first(); y != boost::dynamic_bitset<>::npos;
           y = less[x].find_next(y)) {
        closed.emplace_back(x, y);
      }
    }
    return Poset(size, closed);
  }

  std::size_t size() const noexcept { return less_.size(); }
  bool less(std::size_t x, std::size_t y) const { return less_.at(x).test(y); }
  bool comparable(std::size_t x, std::size_t y) const { return less(x, y) || less(y, x); }

  /// Sorted list of related pairs (x, y) with x < y in the order.
  std::vector<std::pair<std::size_t, std::size_t>> relation() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < size(); ++x) {
      for (std::size_t y = less_[x].find_first(); y != boost::dynamic_bitset<>::npos;
           y = less_[x].find_next(y)) {
        out.emplace_back(x, y);
      }
    }
    return out;
  }

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  std::vector<boost::dynamic_bitset<>> less_;
};

/// A total order of all elements, first to last.
using LinearExtension = std::vector<std::size_t>;

struct Realizer {
  std::vector<LinearExtension> extensions;

  std::size_t size() const noexcept { return extensions.size(); }
};

/// Size of a largest chain; 0 for the empty poset.
inline std::size_t height(const Poset& p) {
  const std::size_t n = p.size();
  // Elements with fewer strict predecessors come first in some extension.
  std::vector<std::size_t> order(n);
  std::vector<std::size_t> below(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    order[i] = i;
    for (std::size_t j = 0; j < n; ++j) below[i] += p.less(j, i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  std::vector<std::size_t> longest(n, 1);
  std::size_t best = 0;
  for (std::size_t idx = 0; idx < n; ++idx) {
    const std::size_t y = order[idx];
    for (std::size_t jdx = 0; jdx < idx; ++jdx) {
      const std::size_t x = order[jdx];
      if (p.less(x, y)) longest[y] = std::max(longest[y], longest[x] + 1);
    }
    best = std::max(best, longest[y]);
  }
  return best;
}

inline bool is_linear_extension(const LinearExtension& order, const Poset& p) {
  if (order.size() != p.size()) return false;
  std::vector<std::size_t> pos(p.size(), p.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= p.size() || pos[order[i]] != p.size()) return false;
    pos[order[i]] = i;
  }
  for (auto [x, y] : p.relation()) {
    if (pos[x] > pos[y]) return false;
  }
  return true;
}

/// True iff every extension is linear and their intersection is exactly the
/// order. Throws InvalidArgument when an extension is not a permutation of
/// the elements.
inline bool is_realizer(const Realizer& r, const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) return true;
  if (r.extensions.empty()) return false;
  std::vector<std::vector<std::size_t>> positions;
  for (const auto& ext : r.extensions) {
    if (ext.size() != n) throw InvalidArgument("extension does not list every element once");
    std::vector<std::size_t> pos(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (ext[i] >= n || pos[ext[i]] != n) {
        throw InvalidArgument("extension does not list every element once");
      }
      pos[ext[i]] = i;
    }
    positions.push_back(std::move(pos));
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const bool in_all = std::all_of(positions.begin(), positions.end(),
                                      [&](const auto& pos) { return pos[x] < pos[y]; });
      if (in_all != p.less(x, y)) return false;
    }
  }
  return true;
}

struct PosetDimension {
  std::optional<std::size_t> value;  // empty when the dimension exceeds the limit
  Realizer witness;
  std::uint64_t nodes = 0;
};

/// Minimum realizer size by iterative deepening, starting at 1. Every
/// incomparable ordered pair (x, y) must have x before y in some extension;
/// extensions start as copies of the order and only the first untouched one
/// is ever branched into. Limited to 64 elements.
inline PosetDimension exact_poset_dimension(const Poset& p, std::size_t limit,
                                            std::uint64_t budget = 50'000'000) {
  detail::CoverProblem problem;
  problem.elements = p.size();
  if (p.size() > detail::kMaxSearchElements) {
    throw BudgetExceeded("exact poset dimension supports at most 64 elements");
  }
  for (auto [x, y] : p.relation()) {
    problem.base.push_back({static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y)});
  }
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (x != y && !p.comparable(x, y)) {
        detail::CoverRequirement req;
        req.options.push_back({{{static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y)}}});
        problem.requirements.push_back(std::move(req));
      }
    }
  }
  detail::CoverSearch search(problem, budget);
  PosetDimension out;
  for (std::size_t t = 1; t <= limit; ++t) {
    if (auto orders = search.solve(t)) {
      out.value = t;
      for (const auto& o : *orders) out.witness.extensions.emplace_back(o.begin(), o.end());
      break;
    }
  }
  out.nodes = search.nodes();
  return out;
}

}  // namespace sepdim
