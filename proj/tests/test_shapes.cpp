#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "kschur/shapes.hpp"
#include "kschur/sweep.hpp"
#include "reference.hpp"

using namespace kschur;

namespace {

std::vector<std::pair<int, int>> coords(const std::vector<Box>& bs) {
  std::vector<std::pair<int, int>> out;
  for (const Box& b : bs) out.emplace_back(b.row, b.col);
  return out;
}

}  // namespace

TEST(Partition, ParsesAndPrints) {
  EXPECT_EQ(parse_partition("4,2,1").parts(), (std::vector<int>{4, 2, 1}));
  EXPECT_EQ(parse_partition("4,2,1").to_string(), "4,2,1");
  EXPECT_TRUE(parse_partition("").empty());
  EXPECT_TRUE(parse_partition("0").empty());
  EXPECT_EQ(StrictPartition{}.to_string(), "0");
  EXPECT_EQ(parse_partition("3,1,0").length(), 2);
}

TEST(Partition, RejectsNonStrict) {
  EXPECT_THROW(parse_partition("2,2"), Error);
  EXPECT_THROW(parse_partition("1,3"), Error);
  EXPECT_THROW(parse_partition("a,1"), Error);
  EXPECT_THROW(parse_partition("-1"), Error);
}

TEST(Partition, Containment) {
  EXPECT_TRUE(is_subpartition(parse_partition("4,2"), parse_partition("6,4,3,1")));
  EXPECT_TRUE(is_subpartition(StrictPartition{}, parse_partition("3,1")));
  EXPECT_FALSE(is_subpartition(parse_partition("5"), parse_partition("4,2,1")));
  EXPECT_FALSE(is_subpartition(parse_partition("2,1"), parse_partition("3")));
}

TEST(SkewShape, StraightBoxesInOrder) {
  auto order = boxes_in_order(SkewShape(parse_partition("2,1")));
  EXPECT_EQ(coords(order), (std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}}));

  auto big = boxes_in_order(SkewShape(parse_partition("4,2,1")));
  ASSERT_GE(big.size(), 3u);
  EXPECT_EQ(coords({big[0], big[1], big[2]}), (std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}}));
}

TEST(SkewShape, SkewFirstBoxMatchesReference) {
  auto ref_boxes = ref::boxes({6, 4, 3, 1}, {4, 2});
  std::sort(ref_boxes.begin(), ref_boxes.end(),
            [](auto a, auto b) { return std::make_pair(a.second, a.first) < std::make_pair(b.second, b.first); });
  auto order = boxes_in_order(parse_shape("6,4,3,1/4,2"));
  EXPECT_EQ(coords(order), ref_boxes);
  EXPECT_EQ(order.front(), (Box{3, 3}));
}

TEST(SkewShape, RejectsInnerOutside) {
  EXPECT_THROW(parse_shape("4,2,1/5"), Error);
  EXPECT_THROW(parse_shape("3/2,1"), Error);
}

TEST(SkewShape, BoxCountsAndSetDifference) {
  for (const auto& lambda : strict_partitions_up_to(8)) {
    SkewShape straight(lambda);
    ASSERT_EQ(static_cast<int>(straight.size()), lambda.weight());
    for (const auto& mu : subpartitions(lambda)) {
      SkewShape skew(lambda, mu);
      std::set<Box> expect(straight.boxes().begin(), straight.boxes().end());
      const SkewShape inner(mu);
      for (const Box& b : inner.boxes()) expect.erase(b);
      std::set<Box> got(skew.boxes().begin(), skew.boxes().end());
      EXPECT_EQ(got, expect) << skew.to_string();
      EXPECT_EQ(static_cast<int>(skew.size()), lambda.weight() - mu.weight());
      EXPECT_EQ(coords(skew.boxes()), ref::boxes(lambda.parts(), mu.parts()));
    }
  }
}

TEST(SkewShape, ColumnMajorOrderIsStrictTotal) {
  for (const auto& s : shapes_in_range(7, true)) {
    auto order = boxes_in_order(s);
    ASSERT_EQ(order.size(), s.size());
    std::set<Box> distinct(order.begin(), order.end());
    EXPECT_EQ(distinct.size(), order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      EXPECT_FALSE(column_major_less(order[i], order[i]));
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        EXPECT_TRUE(column_major_less(order[i], order[j]));
        EXPECT_FALSE(column_major_less(order[j], order[i]));
      }
    }
  }
}

TEST(Removable, Examples) {
  EXPECT_EQ(coords(removable_boxes(parse_partition("7,5,4,2")).boxes),
            (std::vector<std::pair<int, int>>{{1, 7}, {3, 6}, {4, 5}}));
  EXPECT_EQ(coords(removable_boxes(parse_partition("1")).boxes), (std::vector<std::pair<int, int>>{{1, 1}}));
  EXPECT_EQ(coords(removable_boxes(parse_partition("3,2,1")).boxes), ref::removable({3, 2, 1}));
  EXPECT_EQ(coords(removable_boxes(parse_partition("3,2,1")).boxes), (std::vector<std::pair<int, int>>{{3, 3}}));
  EXPECT_EQ(removable_boxes(parse_partition("7,5,4,2")).last_row_box(), (Box{4, 5}));
  EXPECT_THROW(removable_boxes(StrictPartition{}), Error);
}

TEST(Removable, MatchesReferenceEverywhere) {
  for (const auto& mu : strict_partitions_up_to(10)) {
    if (mu.empty()) continue;
    EXPECT_EQ(coords(removable_boxes(mu).boxes), ref::removable(mu.parts())) << mu.to_string();
  }
}

TEST(RemoveSubset, Examples) {
  const auto mu = parse_partition("7,5,4,2");
  const std::vector<Box> b = {Box{1, 7}, Box{4, 5}};
  EXPECT_EQ(remove_subset(mu, b), parse_partition("6,5,4,1"));
  EXPECT_EQ(remove_subset(mu, std::vector<Box>{}), mu);
  EXPECT_TRUE(remove_subset(parse_partition("1"), std::vector<Box>{Box{1, 1}}).empty());
  EXPECT_THROW(remove_subset(mu, std::vector<Box>{Box{2, 6}}), Error);
  EXPECT_THROW(remove_subset(mu, std::vector<Box>{Box{4, 5}, Box{4, 5}}), Error);
}

TEST(RemoveSubset, EverySubsetStaysStrict) {
  for (const auto& mu : strict_partitions_up_to(8)) {
    if (mu.empty()) continue;
    const auto rem = removable_boxes(mu).boxes;
    for (std::uint32_t m = 0; m < (1u << rem.size()); ++m) {
      std::vector<Box> chosen;
      std::vector<int> expect = mu.parts();
      for (std::size_t i = 0; i < rem.size(); ++i) {
        if (m & (1u << i)) {
          chosen.push_back(rem[i]);
          --expect[static_cast<std::size_t>(rem[i].row - 1)];
        }
      }
      while (!expect.empty() && expect.back() == 0) expect.pop_back();
      ASSERT_TRUE(ref::is_strict(expect)) << mu.to_string();
      EXPECT_EQ(remove_subset(mu, chosen).parts(), expect);
    }
  }
}

TEST(Partitions, CountsOfStrictPartitions) {
  const std::vector<std::size_t> q = {1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10};
  for (int w = 0; w <= 10; ++w) EXPECT_EQ(strict_partitions_of(w).size(), q[static_cast<std::size_t>(w)]);
}

TEST(Sweep, RangesAreCanonical) {
  auto straight = shapes_in_range(3, false);
  std::vector<std::string> names;
  for (const auto& s : straight) names.push_back(s.to_string());
  EXPECT_EQ(names, (std::vector<std::string>{"1", "2", "3", "2,1"}));
  for (const auto& s : nonempty_inner_pairs(5)) EXPECT_FALSE(s.inner().empty());
}
