#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "test_support.hpp"

namespace antiatom {
namespace {

using V = std::vector<Element>;

TEST(Partition, Validation) {
  EXPECT_NO_THROW(Partition({3, 3, 1}));
  EXPECT_THROW(Partition({1, 2}), InvalidInput);
  EXPECT_THROW(Partition({2, 0}), InvalidInput);
  EXPECT_EQ(Partition({3, 3, 1}).size(), 7);
  EXPECT_EQ(Partition({3, 3, 1}).length(), 3U);
  EXPECT_EQ(Partition().size(), 0);
}

TEST(Partition, Conjugate) {
  EXPECT_EQ(conjugate(Partition({3, 1})), Partition({2, 1, 1}));
  EXPECT_EQ(conjugate(Partition({2, 2, 2})), Partition({3, 3}));
  EXPECT_EQ(conjugate(Partition()), Partition());
}

TEST(Bijection, Examples) {
  EXPECT_EQ(partition_from_set(set_from_gaps({1})), Partition({1}));
  EXPECT_EQ(partition_from_set(set_from_gaps({1, 2})), Partition({1, 1}));
  EXPECT_EQ(partition_from_set(set_from_gaps({2})), Partition({2}));
  EXPECT_EQ(partition_from_set(dual(set_from_gaps({1, 2}))), Partition({2}));
  auto n4 = partition_from_set(set_from_gaps({1, 2, 3, 4}));
  EXPECT_EQ(n4, Partition({1, 1, 1, 1}));
  EXPECT_EQ(hook_set(n4), (V{1, 2, 3, 4}));
  EXPECT_EQ(partition_from_set(NumericalSet{}), Partition());
  EXPECT_EQ(set_from_partition(Partition()), NumericalSet{});
}

TEST(Hooks, Examples) {
  EXPECT_EQ(hook_multiset(Partition({2, 1})), (V{3, 1, 1}));
  EXPECT_EQ(hook_set(Partition({2, 1})), (V{1, 3}));
  EXPECT_EQ(hook_multiset(Partition({2, 2, 2})), (V{4, 3, 3, 2, 2, 1}));
  EXPECT_EQ(hook_set(Partition({2, 2, 2})), (V{1, 2, 3, 4}));
  EXPECT_TRUE(hook_multiset(Partition()).empty());
  EXPECT_TRUE(hook_set(Partition()).empty());
}

TEST(HookCount, Examples) {
  EXPECT_EQ(count_partitions_with_hookset(NumericalSemigroup::from_generators({3, 5})), 1U);
  EXPECT_EQ(count_partitions_with_hookset(
                NumericalSemigroup::from_set(set_from_gaps({1, 2, 3, 4}))),
            6U);
  EXPECT_EQ(count_partitions_with_hookset(NumericalSemigroup::from_generators({8, 13, 22, 27})),
            3U);
}

TEST(PartitionProperties, LawsOnAllSmallSets) {
  for (Element f = 1; f <= 10; ++f) {
    for (const auto& t : testing::numerical_sets_with_frobenius(f)) {
      auto lambda = partition_from_set(t);
      EXPECT_EQ(set_from_partition(lambda), t);
      EXPECT_EQ(partition_from_set(dual(t)), conjugate(lambda));
      EXPECT_EQ(conjugate(conjugate(lambda)), lambda);
      EXPECT_EQ(static_cast<Element>(hook_multiset(lambda).size()), lambda.size());
      if (f <= 9) EXPECT_EQ(hook_set(lambda), atom_monoid_set(t).gaps());
    }
  }
}

TEST(PartitionProperties, HookCountMatchesP) {
  for (const auto& s : testing::semigroups_up_to(9)) {
    EXPECT_EQ(count_partitions_with_hookset(s), count_P(s));
  }
}

}  // namespace
}  // namespace antiatom
