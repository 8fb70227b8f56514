#include <gtest/gtest.h>

#include <map>

#include "orsrs/layers.hpp"

namespace orsrs {
namespace {

// Oracle: walk all t^k label vectors.
std::map<std::size_t, std::uint64_t> brute_counts(std::size_t t, std::size_t k) {
  std::map<std::size_t, std::uint64_t> counts;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= t;
  for (std::uint64_t x = 0; x < total; ++x) {
    std::uint64_t y = x;
    std::size_t s = 0;
    for (std::size_t i = 0; i < k; ++i) {
      s += y % t + 1;
      y /= t;
    }
    ++counts[s];
  }
  return counts;
}

TEST(LayerCounts, TwoByTwo) {
  const LayerTable table = layer_counts(2, 2);
  EXPECT_EQ(table.count(2), 1);
  EXPECT_EQ(table.count(3), 2);
  EXPECT_EQ(table.count(4), 1);
  EXPECT_EQ(table.best_sum(), 3u);
  EXPECT_EQ(table.best_count(), 2);
  EXPECT_TRUE(table.pigeonhole_holds());
}

TEST(LayerCounts, SingleLabel) {
  const LayerTable table = layer_counts(1, 5);
  EXPECT_EQ(table.min_sum(), 5u);
  EXPECT_EQ(table.max_sum(), 5u);
  EXPECT_EQ(table.count(5), 1);
  EXPECT_EQ(table.best_sum(), 5u);
}

TEST(LayerCounts, ThreeByThree) {
  const LayerTable table = layer_counts(3, 3);
  EXPECT_EQ(table.count(6), 7);
  EXPECT_EQ(table.best_sum(), 6u);
  EXPECT_GE(table.best_count() * 3, 9);
}

TEST(LayerCounts, MatchesEnumerationAndInvariants) {
  for (std::size_t t = 1; t <= 8; ++t) {
    for (std::size_t k = 1; k <= 5; ++k) {
      const LayerTable table = layer_counts(t, k);
      const auto brute = brute_counts(t, k);
      for (std::size_t s = 0; s <= k * t + 1; ++s) {
        const std::uint64_t expected = brute.contains(s) ? brute.at(s) : 0;
        ASSERT_EQ(table.count(s), expected) << t << "," << k << "," << s;
        ASSERT_EQ(table.count(s), table.count(k * (t + 1) - s));  // symmetry
      }
      ASSERT_EQ(table.total(), boost::multiprecision::pow(BigCount(t), static_cast<unsigned>(k)));
      ASSERT_TRUE(table.pigeonhole_holds());
      for (std::size_t s = table.min_sum(); s < table.best_sum(); ++s) ASSERT_LT(table.count(s), table.best_count());
    }
  }
}

TEST(LayerCounts, ExactBeyondMachineWidth) {
  // 40^30 overflows 128 bits; the total must still be exact.
  const LayerTable table = layer_counts(40, 30);
  EXPECT_EQ(table.total(), boost::multiprecision::pow(BigCount(40), 30));
  EXPECT_TRUE(table.pigeonhole_holds());
}

TEST(LayerCounts, RejectsZeroParameters) {
  EXPECT_THROW(layer_counts(0, 2), PreconditionError);
  EXPECT_THROW(layer_counts(2, 0), PreconditionError);
}

TEST(EnumerateLayer, Examples) {
  EXPECT_EQ(enumerate_layer(2, 2, 3), (std::vector<LabelVector>{{1, 2}, {2, 1}}));
  EXPECT_EQ(enumerate_layer(2, 2, 2), (std::vector<LabelVector>{{1, 1}}));
  const auto seven = enumerate_layer(3, 3, 6);
  ASSERT_EQ(seven.size(), 7u);
  EXPECT_EQ(seven.front(), (LabelVector{1, 2, 3}));
  EXPECT_EQ(seven.back(), (LabelVector{3, 2, 1}));
}

TEST(EnumerateLayer, SortedCompleteAndCounted) {
  for (std::size_t t = 1; t <= 5; ++t)
    for (std::size_t k = 1; k <= 4; ++k) {
      const LayerTable table(t, k);
      for (std::size_t s = k; s <= k * t; ++s) {
        const auto layer = enumerate_layer(t, k, s);
        ASSERT_EQ(table.count(s), layer.size());
        ASSERT_TRUE(std::is_sorted(layer.begin(), layer.end()));
        ASSERT_TRUE(std::adjacent_find(layer.begin(), layer.end()) == layer.end());
        for (const auto& a : layer) {
          std::size_t sum = 0;
          for (Label x : a) {
            ASSERT_GE(x, 1u);
            ASSERT_LE(x, t);
            sum += x;
          }
          ASSERT_EQ(sum, s);
        }
      }
    }
}

TEST(EnumerateLayer, EmptyRangeIsAnError) {
  EXPECT_THROW(enumerate_layer(2, 2, 1), PreconditionError);
  EXPECT_THROW(enumerate_layer(2, 2, 5), PreconditionError);
}

}  // namespace
}  // namespace orsrs
