#include <gtest/gtest.h>

#include "sepdim/permutation.hpp"

using namespace sepdim;

TEST(Permutation, RanksAreOneBased) {
  const Permutation p({4, 1, 9});
  EXPECT_EQ(p.rank(4), 1u);
  EXPECT_EQ(p.rank(1), 2u);
  EXPECT_EQ(p.rank(9), 3u);
  EXPECT_EQ(p.at(2), 9u);
  EXPECT_EQ(p.ground_set(), (std::vector<Vertex>{1, 4, 9}));
  EXPECT_THROW(p.rank(5), InvalidArgument);
  EXPECT_FALSE(p.contains(5));
}

TEST(Permutation, RejectsRepeats) {
  EXPECT_THROW(Permutation({1, 2, 1}), InvalidArgument);
}

TEST(Permutation, ReverseAndIdentity) {
  const std::vector<Vertex> ground{2, 3, 5};
  const auto id = Permutation::identity(ground);
  EXPECT_EQ(id.reversed(), Permutation({5, 3, 2}));
  EXPECT_EQ(id.reversed().reversed(), id);
  EXPECT_EQ(id.ranks_over(ground), (std::vector<std::uint32_t>{1, 2, 3}));
}

TEST(PermutationFamily, MembersShareTheGroundSet) {
  PermutationFamily fam({3, 1, 2});
  EXPECT_EQ(std::vector<Vertex>(fam.ground_set().begin(), fam.ground_set().end()),
            (std::vector<Vertex>{1, 2, 3}));
  fam.add(Permutation({2, 1, 3}));
  EXPECT_THROW(fam.add(Permutation({1, 2})), InvalidArgument);
  EXPECT_THROW(fam.add(Permutation({1, 2, 4})), InvalidArgument);
  fam.replace(0, Permutation({3, 2, 1}));
  EXPECT_EQ(fam[0], Permutation({3, 2, 1}));
  EXPECT_THROW(fam.replace(0, Permutation({1})), InvalidArgument);
  EXPECT_THROW(PermutationFamily({1, 1}), InvalidArgument);
}

TEST(PermutationFamily, EmptyFamilyIsAllowed) {
  const PermutationFamily fam({1, 2});
  EXPECT_TRUE(fam.empty());
  EXPECT_EQ(fam.size(), 0u);
}
