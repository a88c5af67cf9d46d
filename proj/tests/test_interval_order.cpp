#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sepdim/generators.hpp"
#include "sepdim/interval_order.hpp"

using namespace sepdim;

namespace {

std::size_t index_of(const IntervalOrder& c, Interval iv) {
  return static_cast<std::size_t>(
      std::find(c.intervals.begin(), c.intervals.end(), iv) - c.intervals.begin());
}

}  // namespace

TEST(IntervalOrderFrom, PathAndTriangle) {
  const auto p3 = interval_order_from(path_graph(3), Permutation({1, 2, 3}));
  EXPECT_EQ(p3.intervals, (std::vector<Interval>{{1, 2}, {2, 3}}));
  EXPECT_EQ(p3.order.relation(), (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}}));

  const auto k3 = interval_order_from(complete_graph(3), Permutation({1, 2, 3}));
  EXPECT_EQ(k3.intervals, canonical_interval_order(3).intervals);
  EXPECT_EQ(k3.order.relation().size(), 1u);
  EXPECT_TRUE(k3.order.less(index_of(k3, {1, 2}), index_of(k3, {2, 3})));

  EXPECT_EQ(interval_order_from(Graph({1, 2}, {}), Permutation({2, 1})).size(), 0u);
}

TEST(IntervalOrderFrom, UsesRanksNotIds) {
  const auto c = interval_order_from(path_graph(3), Permutation({2, 1, 3}));
  EXPECT_EQ(c.intervals, (std::vector<Interval>{{1, 2}, {1, 3}}));
  EXPECT_TRUE(c.order.relation().empty());
}

TEST(CanonicalOrder, SmallCases) {
  EXPECT_EQ(canonical_interval_order(2).size(), 1u);
  const auto c3 = canonical_interval_order(3);
  EXPECT_EQ(c3.size(), 3u);
  EXPECT_EQ(c3.order.relation().size(), 1u);
  const auto c4 = canonical_interval_order(4);
  EXPECT_EQ(c4.size(), 6u);
  EXPECT_EQ(height(c4.order), 3u);
  EXPECT_THROW(canonical_interval_order(1), InvalidArgument);
  EXPECT_THROW(make_interval_order({{2, 2}}, false), InvalidArgument);
  EXPECT_NO_THROW(make_interval_order({{2, 2}}, true));
}

TEST(ClosedCanonical, Examples) {
  const auto iso = to_closed_canonical(5);
  const auto& src = iso.source.intervals;
  const auto& dst = iso.target.intervals;
  EXPECT_EQ(dst[iso.map[index_of(iso.source, {1, 2})]], (Interval{1, 1}));
  EXPECT_EQ(dst[iso.map[index_of(iso.source, {2, 5})]], (Interval{2, 4}));
  EXPECT_EQ(src.size(), dst.size());

  const auto c3 = to_closed_canonical(3);
  const auto a = index_of(c3.source, {1, 2}), b = index_of(c3.source, {2, 3});
  EXPECT_TRUE(c3.source.order.less(a, b));
  EXPECT_TRUE(c3.target.order.less(c3.map[a], c3.map[b]));
}

TEST(ClosedCanonical, IsomorphismUpToEight) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto iso = to_closed_canonical(n);
    EXPECT_TRUE(is_order_isomorphism(iso.source.order, iso.target.order, iso.map)) << n;
    // Pair by pair, straight from the endpoint rules.
    for (std::size_t x = 0; x < iso.source.size(); ++x) {
      for (std::size_t y = 0; y < iso.source.size(); ++y) {
        const auto [a, b] = iso.source.intervals[x];
        const auto [c, d] = iso.source.intervals[y];
        const auto [a2, b2] = iso.target.intervals[iso.map[x]];
        const auto [c2, d2] = iso.target.intervals[iso.map[y]];
        EXPECT_EQ(b <= c, b2 < c2);
        (void)a; (void)d; (void)a2; (void)d2;
      }
    }
  }
}

TEST(ClosedCanonical, RejectsNonIsomorphisms) {
  const auto iso = to_closed_canonical(4);
  auto bad = iso.map;
  std::swap(bad[0], bad[1]);
  EXPECT_FALSE(is_order_isomorphism(iso.source.order, iso.target.order, bad));
  bad = iso.map;
  bad[0] = bad[1];
  EXPECT_FALSE(is_order_isomorphism(iso.source.order, iso.target.order, bad));
}

TEST(CanonicalDimension, SmallValuesAgainstOracle) {
  EXPECT_EQ(oracle::poset_dimension(canonical_interval_order(2).order, 3), 1u);
  EXPECT_EQ(oracle::poset_dimension(canonical_interval_order(3).order, 3), 2u);
  EXPECT_EQ(exact_poset_dimension(canonical_interval_order(2).order, 3).value, 1u);
  EXPECT_EQ(exact_poset_dimension(canonical_interval_order(3).order, 3).value, 2u);
  EXPECT_EQ(oracle::poset_dimension(canonical_interval_order(4).order, 3),
            exact_poset_dimension(canonical_interval_order(4).order, 3).value);
}

TEST(CanonicalDimension, MonotoneAndAboveBound) {
  std::size_t prev = 0;
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto r = exact_poset_dimension(canonical_interval_order(n).order, 6);
    ASSERT_TRUE(r.value);
    EXPECT_GE(*r.value, prev);
    prev = *r.value;
    if (n >= 3) {
      EXPECT_GE(static_cast<double>(*r.value), std::log2(std::log2(static_cast<double>(n - 1))));
    }
    EXPECT_TRUE(is_realizer(r.witness, canonical_interval_order(n).order));
  }
}

TEST(RealizerHeuristic, Examples) {
  const auto chain = interval_order_from(path_graph(5), Permutation({1, 2, 3, 4, 5}));
  EXPECT_EQ(realizer_heuristic(chain).size(), 1u);
  EXPECT_EQ(realizer_heuristic(canonical_interval_order(3)).size(), 2u);
  const auto anti = make_interval_order({{1, 5}, {2, 6}, {3, 7}, {4, 8}}, false);
  EXPECT_EQ(realizer_heuristic(anti).size(), 2u);
  EXPECT_TRUE(realizer_heuristic(make_interval_order({}, false)).extensions.empty());
}

TEST(RealizerHeuristic, ValidOnCanonicalAndRandomOrders) {
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto c = canonical_interval_order(n);
    const auto r = realizer_heuristic(c);
    EXPECT_TRUE(is_realizer(r, c.order)) << n;
  }
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = random_gnp_graph(3 + rng() % 25, 0.3, rng());
    std::vector<Vertex> order(g.vertices().begin(), g.vertices().end());
    std::shuffle(order.begin(), order.end(), rng);
    const auto c = interval_order_from(g, Permutation(order));
    const auto r = realizer_heuristic(c);
    EXPECT_TRUE(is_realizer(r, c.order));
    if (c.size() > 0 && c.size() <= 7) {
      EXPECT_GE(r.size(), *exact_poset_dimension(c.order, 8).value);
    }
  }
}
