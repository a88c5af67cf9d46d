#include <gtest/gtest.h>

#include <random>

#include "sepdim/degenerate_cover.hpp"
#include "sepdim/generators.hpp"

using namespace sepdim;

namespace {

std::vector<Vertex> seq(const Permutation& p) { return {p.order().begin(), p.order().end()}; }

// Vertices a..e as ids 1..5.
const StarForest kTwoStars{{{1, {2, 3}}, {4, {5}}}, {{1, 2}, {1, 3}, {4, 5}}};

}  // namespace

TEST(StarLabels, RootIdAndOwnId) {
  const StarForest one{{{3, {1, 5}}}, {{1, 3}, {3, 5}}};
  const auto lab = star_labels(one);
  for (Vertex v : {1u, 3u, 5u}) {
    EXPECT_EQ(lab.block.at(v), 3u);
    EXPECT_EQ(lab.inner.at(v), v);
  }
  const StarForest two{{{1, {}}, {2, {4}}}, {{2, 4}}};
  const auto lab2 = star_labels(two);
  EXPECT_EQ(lab2.block.at(1), 1u);
  EXPECT_EQ(lab2.block.at(2), 2u);
  EXPECT_EQ(lab2.block.at(4), 2u);
  EXPECT_TRUE(star_labels(StarForest{}).block.empty());
}

TEST(ConstructSigma, TwoStars) {
  const auto [s, sb] = construct_sigma(kTwoStars, Permutation({1, 2, 3, 4, 5}), star_labels(kTwoStars));
  EXPECT_EQ(seq(s), (std::vector<Vertex>{2, 3, 1, 5, 4}));
  EXPECT_EQ(seq(sb), (std::vector<Vertex>{5, 4, 2, 3, 1}));
}

TEST(ConstructSigma, SingleStar) {
  const StarForest c{{{1, {2, 3}}}, {{1, 2}, {1, 3}}};
  const auto [s, sb] = construct_sigma(c, Permutation({1, 2, 3}), star_labels(c));
  EXPECT_EQ(seq(s), (std::vector<Vertex>{2, 3, 1}));
  EXPECT_EQ(seq(sb), (std::vector<Vertex>{2, 3, 1}));
}

TEST(ConstructSigma, Singletons) {
  const StarForest c{{{1, {}}, {2, {}}}, {}};
  const auto [s, sb] = construct_sigma(c, Permutation({2, 1}), star_labels(c));
  EXPECT_EQ(seq(s), (std::vector<Vertex>{2, 1}));
  EXPECT_EQ(seq(sb), (std::vector<Vertex>{1, 2}));
}

TEST(ConstructSigma, MissingLabelThrows) {
  EXPECT_THROW(construct_sigma(kTwoStars, Permutation({1, 2, 3, 4}), star_labels(kTwoStars)),
               InvalidArgument);
}

TEST(DegenerateCover, StarNeedsNothingButStillVerifies) {
  const Graph g = star_graph(5);
  const auto cover = theorem1_family(g, 0);
  EXPECT_TRUE(verify_pairwise_suitable(cover.family, g).ok());
  EXPECT_EQ(cover.family.size(), 2 * cover.star_forests * cover.r);
}

TEST(DegenerateCover, PathAndClique) {
  for (const Graph& g : {path_graph(4), complete_graph(4)}) {
    const auto cover = theorem1_family(g, 3);
    EXPECT_TRUE(verify_pairwise_suitable(cover.family, g).ok());
    EXPECT_EQ(cover.family.size(), 2 * cover.star_forests * cover.r);
    EXPECT_LE(cover.family.size(), 4 * cover.k * cover.r);
  }
  EXPECT_EQ(theorem1_family(path_graph(4), 0).k, 1u);
  EXPECT_EQ(theorem1_family(complete_graph(4), 0).k, 3u);
}

TEST(DegenerateCover, EmptyGraphIsRejected) {
  EXPECT_THROW(theorem1_family(Graph(), 0), InvalidArgument);
}

TEST(DegenerateCover, Deterministic) {
  const Graph g = random_degenerate_graph(80, 2, 4);
  EXPECT_EQ(theorem1_family(g, 11).family, theorem1_family(g, 11).family);
}

TEST(DegenerateCover, EachForestSeparatesItsOwnEdges) {
  // For an edge {a, b} of star forest C_i and a disjoint edge {c, d}, the
  // 2r members built from C_i alone separate them. Cases by how many of c, d
  // fall in the star of {a, b} are tallied to make sure all occur.
  std::size_t cases[3] = {0, 0, 0};
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = random_degenerate_graph(8 + rng() % 30, 1 + rng() % 3, rng());
    const auto cover = theorem1_family(g, trial);
    const auto forests = star_forest_decomposition(g);
    ASSERT_EQ(forests.size(), cover.star_forests);
    const std::size_t per = 2 * cover.r;
    for (std::size_t i = 0; i < forests.size(); ++i) {
      const auto lab = star_labels(forests[i]);
      for (const Edge& e : forests[i].covered_edges) {
        for (const Edge& f : g.edges()) {
          if (!e.disjoint_from(f)) continue;
          const Vertex star = lab.root_of.at(e.u);
          cases[(lab.root_of.at(f.u) == star) + (lab.root_of.at(f.v) == star)]++;
          bool hit = false;
          for (std::size_t m = i * per; m < (i + 1) * per && !hit; ++m) {
            hit = separates(cover.family[m], e, f);
          }
          EXPECT_TRUE(hit);
        }
      }
    }
  }
  EXPECT_GT(cases[0], 0u);
  EXPECT_GT(cases[1], 0u);
  EXPECT_GT(cases[2], 0u);
}

TEST(DegenerateCover, RandomDegenerateGraphsVerify) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t k = 1 + trial % 3;
    const Graph g = random_degenerate_graph(10 + rng() % 120, k, rng());
    const auto cover = theorem1_family(g, trial);
    EXPECT_LE(cover.k, k);
    EXPECT_LE(cover.star_forests, 2 * cover.k);
    EXPECT_EQ(cover.family.size(), 2 * cover.star_forests * cover.r);
    EXPECT_TRUE(verify_pairwise_suitable(cover.family, g).ok());
  }
}
