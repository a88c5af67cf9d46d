#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "sepdim/graph.hpp"
#include "sepdim/permutation.hpp"
#include "sepdim/poset.hpp"

namespace sepdim {

using Interval = std::pair<int, int>;

/// Intervals with the order induced by their endpoints. Open intervals
/// (a, b) precede (c, d) iff b <= c; closed intervals [a, b] precede [c, d]
/// iff b < c. Element i of `order` is `intervals[i]`.
struct IntervalOrder {
  std::vector<Interval> intervals;
  bool closed = false;
  Poset order;

  std::size_t size() const noexcept { return intervals.size(); }
};

inline IntervalOrder make_interval_order(std::vector<Interval> intervals, bool closed) {
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t x = 0; x < intervals.size(); ++x) {
    const auto [a, b] = intervals[x];
    if (closed ? a > b : a >= b) throw InvalidArgument("interval endpoints out of order");
    for (std::size_t y = 0; y < intervals.size(); ++y) {
      const int c = intervals[y].first;
      if (closed ? b < c : b <= c) rel.emplace_back(x, y);
    }
  }
  Poset p(intervals.size(), rel);
  return {std::move(intervals), closed, std::move(p)};
}

/// C_{G,sigma}: one open interval (rank of earlier end, rank of later end)
/// per edge, sorted lexicographically.
inline IntervalOrder interval_order_from(const Graph& g, const Permutation& sigma) {
  std::vector<Interval> intervals;
  intervals.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    const int a = static_cast<int>(sigma.rank(e.u));
    const int b = static_cast<int>(sigma.rank(e.v));
    intervals.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(intervals.begin(), intervals.end());
  return make_interval_order(std::move(intervals), false);
}

/// C_n: all open intervals with endpoints in 1..n.
inline IntervalOrder canonical_interval_order(std::size_t n) {
  if (n < 2) throw InvalidArgument("canonical interval order needs n >= 2");
  std::vector<Interval> intervals;
  for (int a = 1; a <= static_cast<int>(n); ++a) {
    for (int b = a + 1; b <= static_cast<int>(n); ++b) intervals.emplace_back(a, b);
  }
  return make_interval_order(std::move(intervals), false);
}

/// I_m: all closed intervals with endpoints in 1..m.
inline IntervalOrder canonical_closed_interval_order(std::size_t m) {
  std::vector<Interval> intervals;
  for (int a = 1; a <= static_cast<int>(m); ++a) {
    for (int b = a; b <= static_cast<int>(m); ++b) intervals.emplace_back(a, b);
  }
  return make_interval_order(std::move(intervals), true);
}

struct OrderIsomorphism {
  IntervalOrder source;
  IntervalOrder target;
  std::vector<std::size_t> map;  // source element -> target element
};

/// True iff `map` is a bijection that preserves and reflects the order.
inline bool is_order_isomorphism(const Poset& from, const Poset& to,
                                 const std::vector<std::size_t>& map) {
  if (from.size() != to.size() || map.size() != from.size()) return false;
  std::vector<bool> hit(to.size(), false);
  for (std::size_t m : map) {
    if (m >= to.size() || hit[m]) return false;
    hit[m] = true;
  }
  for (std::size_t x = 0; x < from.size(); ++x) {
    for (std::size_t y = 0; y < from.size(); ++y) {
      if (from.less(x, y) != to.less(map[x], map[y])) return false;
    }
  }
  return true;
}

/// The map (i, j) -> [i, j - 1] from C_n onto I_{n-1}.
inline OrderIsomorphism to_closed_canonical(std::size_t n) {
  auto source = canonical_interval_order(n);
  auto target = canonical_closed_interval_order(n - 1);
  std::vector<std::size_t> map(source.size());
  for (std::size_t x = 0; x < source.size(); ++x) {
    const Interval image{source.intervals[x].first, source.intervals[x].second - 1};
    auto it = std::lower_bound(target.intervals.begin(), target.intervals.end(), image);
    map[x] = static_cast<std::size_t>(it - target.intervals.begin());
  }
  return {std::move(source), std::move(target), std::move(map)};
}

namespace detail {

// Transitively closed partial order over dynamic bit rows, used to grow
// patch extensions.
class GrowingOrder {
 public:
  explicit GrowingOrder(const Poset& p)
      : succ_(p.size(), boost::dynamic_bitset<>(p.size())),
        pred_(p.size(), boost::dynamic_bitset<>(p.size())) {
    for (auto [x, y] : p.relation()) {
      succ_[x].set(y);
      pred_[y].set(x);
    }
  }

  bool holds(std::size_t x, std::size_t y) const { return succ_[x].test(y); }

  bool add(std::size_t x, std::size_t y) {
    if (holds(x, y)) return true;
    if (x == y || holds(y, x)) return false;
    auto lower = pred_[x];
    lower.set(x);
    auto upper = succ_[y];
    upper.set(y);
    for (std::size_t a = lower.find_first(); a != boost::dynamic_bitset<>::npos;
         a = lower.find_next(a)) {
      succ_[a] |= upper;
    }
    for (std::size_t b = upper.find_first(); b != boost::dynamic_bitset<>::npos;
         b = upper.find_next(b)) {
      pred_[b] |= lower;
    }
    return true;
  }

  LinearExtension linearize() const {
    const std::size_t n = succ_.size();
    LinearExtension out;
    out.reserve(n);
    boost::dynamic_bitset<> placed(n);
    while (out.size() < n) {
      for (std::size_t x = 0; x < n; ++x) {
        if (!placed.test(x) && pred_[x].is_subset_of(placed)) {
          out.push_back(x);
          placed.set(x);
          break;
        }
      }
    }
    return out;
  }

 private:
  std::vector<boost::dynamic_bitset<>> succ_;
  std::vector<boost::dynamic_bitset<>> pred_;
};

inline std::vector<std::size_t> positions_of(const LinearExtension& ext) {
  std::vector<std::size_t> pos(ext.size());
  for (std::size_t i = 0; i < ext.size(); ++i) pos[ext[i]] = i;
  return pos;
}

}  // namespace detail

/// A valid realizer with no optimality guarantee.
///
/// Candidate extensions come from sorting the intervals on endpoint keys
/// (left ascending with right descending, right ascending with left
/// descending, and the two same-direction mixtures); candidates are taken
/// greedily while they reverse a pair no chosen extension has reversed yet.
/// Pairs that remain get patch extensions: the order plus the missing pair,
/// extended greedily with further missing pairs, then linearised. Finally any
/// extension whose removal keeps a realizer is dropped.
inline Realizer realizer_heuristic(const IntervalOrder& c) {
  const std::size_t n = c.size();
  const Poset& p = c.order;
  Realizer out;
  if (n == 0) return out;
  if (n > 1 && p.relation().empty()) {
    LinearExtension ext(n);
    std::iota(ext.begin(), ext.end(), std::size_t{0});
    out.extensions.push_back(ext);
    std::reverse(ext.begin(), ext.end());
    out.extensions.push_back(std::move(ext));
    return out;
  }

  const auto& iv = c.intervals;
  auto sorted_by = [&](auto less) {
    LinearExtension ext(n);
    std::iota(ext.begin(), ext.end(), std::size_t{0});
    std::stable_sort(ext.begin(), ext.end(), less);
    return ext;
  };
  std::vector<LinearExtension> candidates = {
      sorted_by([&](std::size_t a, std::size_t b) {
        return iv[a].first != iv[b].first ? iv[a].first < iv[b].first : iv[a].second > iv[b].second;
      }),
      sorted_by([&](std::size_t a, std::size_t b) {
        return iv[a].second != iv[b].second ? iv[a].second < iv[b].second : iv[a].first > iv[b].first;
      }),
      sorted_by([&](std::size_t a, std::size_t b) {
        return iv[a].first != iv[b].first ? iv[a].first < iv[b].first : iv[a].second < iv[b].second;
      }),
      sorted_by([&](std::size_t a, std::size_t b) {
        return iv[a].second != iv[b].second ? iv[a].second < iv[b].second : iv[a].first < iv[b].first;
      }),
  };

  // needed[x] bit y: x must still precede y in some chosen extension.
  std::vector<boost::dynamic_bitset<>> needed(n, boost::dynamic_bitset<>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && !p.comparable(x, y)) needed[x].set(y);
    }
  }
  auto gain_of = [&](const LinearExtension& ext) {
    const auto pos = detail::positions_of(ext);
    std::size_t gain = 0;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = needed[x].find_first(); y != boost::dynamic_bitset<>::npos;
           y = needed[x].find_next(y)) {
        gain += pos[x] < pos[y];
      }
    }
    return gain;
  };
  auto take = [&](LinearExtension ext) {
    const auto pos = detail::positions_of(ext);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = needed[x].find_first(); y != boost::dynamic_bitset<>::npos;
           y = needed[x].find_next(y)) {
        if (pos[x] < pos[y]) needed[x].reset(y);
      }
    }
    out.extensions.push_back(std::move(ext));
  };

  // The first candidate is always taken so that chains get one extension.
  take(candidates.front());
  while (true) {
    std::size_t best = candidates.size();
    std::size_t best_gain = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const std::size_t g = gain_of(candidates[i]);
      if (g > best_gain) {
        best_gain = g;
        best = i;
      }
    }
    if (best == candidates.size()) break;
    take(candidates[best]);
  }

  for (std::size_t x = 0; x < n; ++x) {
    while (needed[x].any()) {
      const std::size_t y = needed[x].find_first();
      detail::GrowingOrder patch(p);
      patch.add(x, y);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = needed[a].find_first(); b != boost::dynamic_bitset<>::npos;
             b = needed[a].find_next(b)) {
          patch.add(a, b);
        }
      }
      take(patch.linearize());
    }
  }

  for (std::size_t i = out.extensions.size(); i-- > 0 && out.extensions.size() > 1;) {
    Realizer trial = out;
    trial.extensions.erase(trial.extensions.begin() + static_cast<std::ptrdiff_t>(i));
    if (is_realizer(trial, p)) out = std::move(trial);
  }
  return out;
}

}  // namespace sepdim
