#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace lrsearch {
namespace {

const std::vector<int> kP2 = {7, 2, 1, 3, 6, 4, 5};

int scan_min(const std::vector<int>& v, Query q) {
  int best = q.q1 == 0 ? static_cast<int>(v.size()) + 1 : v[static_cast<std::size_t>(q.q1 - 1)];
  for (int h = std::max(q.q1, 1); h <= q.q2; ++h) best = std::min(best, v[static_cast<std::size_t>(h - 1)]);
  return best;
}

int scan_max(const std::vector<int>& v, Query q) {
  int best = 0;
  for (int h = std::max(q.q1, 1); h <= q.q2; ++h) best = std::max(best, v[static_cast<std::size_t>(h - 1)]);
  return best;
}

TEST(ComputeInf, Examples) {
  const std::vector<Query> q = {{1, 3}, {5, 7}, {0, 7}, {6, 7}};
  EXPECT_EQ(compute_inf(kP2, q), (std::vector<int>{1, 4, 1, 4}));
  const std::vector<int> id = {1, 2, 3, 4, 5};
  const std::vector<Query> qi = {{1, 2}, {2, 5}, {3, 4}, {4, 5}, {1, 5}};
  EXPECT_EQ(compute_inf(id, qi), (std::vector<int>{1, 2, 3, 4, 1}));
}

TEST(ComputeSup, Examples) {
  const std::vector<Query> q = {{2, 4}, {1, 7}, {5, 7}};
  EXPECT_EQ(compute_sup(kP2, q), (std::vector<int>{3, 7, 6}));
  const std::vector<int> id = {1, 2, 3, 4, 5};
  const std::vector<Query> qi = {{1, 2}, {2, 5}, {3, 4}};
  EXPECT_EQ(compute_sup(id, qi), (std::vector<int>{2, 5, 4}));
}

TEST(ComputeInf, RejectsBadQueries) {
  const std::vector<Query> bad[] = {{{3, 3}}, {{4, 2}}, {{1, 8}}, {{-1, 2}}};
  for (const auto& q : bad) {
    try {
      compute_inf(kP2, q);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kQueryOutOfRange);
    }
  }
}

TEST(ComputeInf, EmptyQuerySet) {
  EXPECT_TRUE(compute_inf(kP2, {}).empty());
  EXPECT_TRUE(compute_sup(kP2, {}).empty());
}

TEST(ComputeInf, ArraysWithRepeats) {
  const std::vector<int> v = {3, 3, 1, 5, 1, 2};
  std::vector<Query> q;
  for (int i = 0; i <= 6; ++i) {
    for (int j = i + 1; j <= 6; ++j) q.push_back({i, j});
  }
  const auto lo = compute_inf(v, q);
  const auto hi = compute_sup(v, q);
  for (std::size_t i = 0; i < q.size(); ++i) {
    EXPECT_EQ(lo[i], scan_min(v, q[i]));
    EXPECT_EQ(hi[i], scan_max(v, q[i]));
  }
}

TEST(ComputeInf, RandomAgainstScan) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 300; ++round) {
    const int n = std::uniform_int_distribution<int>(1, 200)(rng);
    const std::vector<int> v = testing::random_values(rng, n);
    std::uniform_int_distribution<int> pos(0, n);
    std::vector<Query> q;
    for (int i = 0; i < 50; ++i) {
      int a = pos(rng);
      int b = pos(rng);
      if (a == b) continue;
      q.push_back({std::min(a, b), std::max(a, b)});
    }
    const auto lo = compute_inf(v, q);
    const auto hi = compute_sup(v, q);
    for (std::size_t i = 0; i < q.size(); ++i) {
      ASSERT_EQ(lo[i], scan_min(v, q[i]));
      ASSERT_EQ(hi[i], scan_max(v, q[i]));
    }
  }
}

TEST(SortQueries, OrdersByRightThenLeft) {
  const std::vector<Query> q = {{2, 5}, {0, 3}, {1, 5}, {3, 4}, {0, 5}};
  const std::vector<int> order = sort_queries(q, 5);
  EXPECT_EQ(order, (std::vector<int>{1, 3, 4, 2, 0}));
}

TEST(Queries, ForPermutation) {
  const SignedPermutation p = SignedPermutation::from_signed(kP2);
  const QuerySet q = queries_for_permutation(p);
  ASSERT_EQ(q.size(), 6u);
  EXPECT_EQ(q[3], (Query{6, 7}));  // t = 4
  EXPECT_EQ(q[5], (Query{1, 5}));  // t = 6
  const QuerySet id = queries_for_permutation(SignedPermutation::identity(4));
  EXPECT_EQ(id, (QuerySet{{1, 2}, {2, 3}, {3, 4}}));
  EXPECT_EQ(queries_for_profile(testing::example_one()).size(), 1u);
}

TEST(ComputeBounds, ExampleOneCommon) {
  const MinMaxProfile p = compute_bounds(testing::example_one(), BoundsKind::kBasic);
  EXPECT_EQ(p.lower, (std::vector<int>{0, 1, 1, 3, 4, 4, 1}));
  EXPECT_EQ(p.upper, (std::vector<int>{0, 2, 3, 6, 5, 6, 7}));
}

TEST(ComputeBounds, ExampleTwoConserved) {
  const MinMaxProfile p = compute_bounds(testing::example_two(), BoundsKind::kConserved, true);
  EXPECT_EQ(p.lower[6], 3);
  EXPECT_EQ(p.min_values[6], 4);
  EXPECT_EQ(p.lower, (std::vector<int>{0, 1, 2, 1, 4, 3, 3}));
  EXPECT_EQ(p.upper, (std::vector<int>{0, 4, 3, 7, 5, 6, 7}));
}

TEST(ComputeBounds, SinglePermutation) {
  const MinMaxProfile p = compute_bounds(testing::make_instance({{1, 2, 3, 4}}), BoundsKind::kBasic);
  EXPECT_EQ(p.lower, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(p.upper, (std::vector<int>{0, 2, 3, 4}));
}

TEST(ComputeBounds, InvariantChainAndFold) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 200; ++round) {
    const auto c = testing::random_case(rng, IntervalClass::kCommon, 30, 5);
    const int n = c.instance.size();
    for (BoundsKind kind : {BoundsKind::kBasic, BoundsKind::kConserved}) {
      const MinMaxProfile all = compute_bounds(c.instance, kind, true);
      std::vector<int> lo(static_cast<std::size_t>(n), 1 << 30), hi(static_cast<std::size_t>(n), -1);
      for (std::size_t k = 0; k < c.raw.size(); ++k) {
        const std::vector<RawSequence> pair = {c.raw[0], c.raw[k]};
        const MinMaxProfile one = compute_bounds(validate(pair, IntervalClass::kCommon), kind);
        for (int t = 1; t < n; ++t) {
          lo[static_cast<std::size_t>(t)] = std::min(lo[static_cast<std::size_t>(t)], one.lower[static_cast<std::size_t>(t)]);
          hi[static_cast<std::size_t>(t)] = std::max(hi[static_cast<std::size_t>(t)], one.upper[static_cast<std::size_t>(t)]);
        }
      }
      for (int t = 1; t < n; ++t) {
        const auto i = static_cast<std::size_t>(t);
        ASSERT_EQ(all.lower[i], lo[i]);
        ASSERT_EQ(all.upper[i], hi[i]);
        ASSERT_LE(all.lower[i], all.min_values[i]);
        ASSERT_LE(all.min_values[i], t);
        ASSERT_LE(t + 1, all.max_values[i]);
        ASSERT_LE(all.max_values[i], all.upper[i]);
        if (kind == BoundsKind::kBasic) {
          ASSERT_GE(all.lower[i], 1);
          ASSERT_LE(all.upper[i], n);
        } else {
          ASSERT_GE(all.lower[i], 0);
          ASSERT_LE(all.upper[i], n + 1);
        }
      }
    }
  }
}

}  // namespace
}  // namespace lrsearch
