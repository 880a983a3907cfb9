#include <gtest/gtest.h>

#include <map>

#include "support.hpp"

namespace lrsearch {
namespace {

using testing::example_one;
using testing::example_two;
using testing::intervals;
using testing::search_set;

using Emissions = std::map<int, std::vector<Interval>>;

template <class Filter>
Emissions emissions_by_t(const ProblemInstance& instance, BoundsKind kind, Filter& filter) {
  const MinMaxProfile profile = compute_bounds(instance, kind);
  LRStack stack(kLMinusRPlus, instance.size() + 2);
  std::vector<Interval> out;
  Emissions by_t;
  SearchOptions options;
  options.check_stack = true;
  options.check_filter_readonly = true;
  options.observer = [&](int t, const LRStack&, std::span<const Interval> emitted) {
    by_t[t] = std::vector<Interval>(emitted.begin(), emitted.end());
  };
  lr_search(profile, stack, filter, out, options);
  return by_t;
}

TEST(Search, ExampleOneCommon) {
  const IntervalReport r = run(example_one(), IntervalClass::kCommon);
  EXPECT_EQ(r.intervals, (std::vector<Interval>{
                             {4, 5}, {4, 6}, {3, 6}, {1, 2}, {1, 3}, {1, 6}, {1, 7}}));
  EXPECT_EQ(r.count(), 7u);
  EXPECT_EQ(r.n, 7);
  EXPECT_EQ(r.k, 2);
}

TEST(Search, ExampleOneNested) {
  EXPECT_EQ(search_set(example_one(), IntervalClass::kNested),
            intervals({{1, 2}, {1, 3}, {3, 6}, {4, 5}, {4, 6}}));
}

TEST(Search, ExampleOneMaximalNested) {
  EXPECT_EQ(run(example_one(), IntervalClass::kMaximalNested).intervals,
            (std::vector<Interval>{{3, 6}, {1, 3}}));
}

TEST(Search, ExampleOneIrreducibleCommon) {
  EXPECT_EQ(run(example_one(), IntervalClass::kIrreducibleCommon).intervals,
            (std::vector<Interval>{{4, 5}, {4, 6}, {3, 6}, {1, 2}, {1, 3}, {1, 7}}));
}

TEST(Search, ExampleTwoConserved) {
  EXPECT_EQ(run(example_two(), IntervalClass::kConserved).intervals,
            (std::vector<Interval>{{2, 3}, {1, 7}}));
  EXPECT_EQ(run(example_two(), IntervalClass::kIrreducibleConserved).intervals,
            (std::vector<Interval>{{2, 3}, {1, 7}}));
}

TEST(Search, ExampleTwoCommonIgnoresSigns) {
  EXPECT_EQ(search_set(example_two(), IntervalClass::kCommon),
            intervals({{1, 3}, {1, 6}, {1, 7}, {2, 3}, {2, 6}, {2, 7}, {4, 5}, {4, 6}, {4, 7}}));
}

TEST(Search, IdentityCopies) {
  const ProblemInstance id = testing::identity_copies(9, 3);
  EXPECT_EQ(run(id, IntervalClass::kCommon).count(), 36u);
  EXPECT_EQ(run(id, IntervalClass::kNested).count(), 36u);
  EXPECT_EQ(run(id, IntervalClass::kConserved).count(), 36u);
  EXPECT_EQ(run(id, IntervalClass::kSameSignCommon).count(), 36u);
  EXPECT_EQ(run(id, IntervalClass::kMaximalNested).intervals, (std::vector<Interval>{{1, 9}}));
  std::vector<Interval> adjacent;
  for (int t = 8; t >= 1; --t) adjacent.push_back({t, t + 1});
  EXPECT_EQ(run(id, IntervalClass::kIrreducibleCommon).intervals, adjacent);
  EXPECT_EQ(run(id, IntervalClass::kIrreducibleConserved).intervals, adjacent);
}

TEST(Search, DegenerateSizes) {
  const ProblemInstance one = testing::make_instance({{1}, {1}}, IntervalClass::kConserved);
  for (IntervalClass cls : kAllIntervalClasses) EXPECT_EQ(run(one, cls).count(), 0u);
  const ProblemInstance two = testing::make_instance({{1, 2}, {1, 2}}, IntervalClass::kConserved);
  EXPECT_EQ(run(two, IntervalClass::kConserved).intervals, (std::vector<Interval>{{1, 2}}));
  const ProblemInstance swapped = testing::make_instance({{1, 2}, {2, 1}});
  for (IntervalClass cls : kAllIntervalClasses) {
    if (needs_conserved_endpoints(cls)) continue;
    EXPECT_EQ(run(swapped, cls).intervals, (std::vector<Interval>{{1, 2}})) << to_string(cls);
  }
}

TEST(Search, RejectsUnreadyInstances) {
  const ProblemInstance p = testing::make_instance({{2, 1, 3}, {1, 2, 3}});
  EXPECT_THROW(run(p, IntervalClass::kCommon), Error);
  EXPECT_NO_THROW(run(renumber(p), IntervalClass::kCommon));
  EXPECT_THROW(run(example_one(), IntervalClass::kConserved), Error);
}

TEST(CommonFilter, PerIterationEmissions) {
  CommonFilter f;
  Emissions e = emissions_by_t(example_one(), BoundsKind::kBasic, f);
  EXPECT_TRUE(e[6].empty());
  EXPECT_TRUE(e[5].empty());
  EXPECT_EQ(e[4], (std::vector<Interval>{{4, 5}, {4, 6}}));
  EXPECT_EQ(e[3], (std::vector<Interval>{{3, 6}}));
  EXPECT_TRUE(e[2].empty());
  EXPECT_EQ(e[1], (std::vector<Interval>{{1, 2}, {1, 3}, {1, 6}, {1, 7}}));
}

TEST(NestedFilter, PassesLargestEndpointDown) {
  NestedFilter f(7);
  std::map<int, int> w_after;
  const MinMaxProfile profile = compute_bounds(example_one(), BoundsKind::kBasic);
  LRStack stack(kLMinusRPlus, 9);
  std::vector<Interval> out;
  SearchOptions options;
  Emissions e;
  options.observer = [&](int t, const LRStack&, std::span<const Interval> emitted) {
    e[t] = std::vector<Interval>(emitted.begin(), emitted.end());
    w_after[t] = f.w(t - 1);
  };
  lr_search(profile, stack, f, out, options);
  EXPECT_EQ(e[4], (std::vector<Interval>{{4, 5}, {4, 6}}));
  EXPECT_EQ(w_after[4], 6);
  EXPECT_EQ(e[3], (std::vector<Interval>{{3, 6}}));
  EXPECT_TRUE(e[2].empty());
  EXPECT_EQ(e[1], (std::vector<Interval>{{1, 2}, {1, 3}}));
}

TEST(MaximalNestedFilter, RunEndsAndEmissions) {
  const ProblemInstance p = example_one();
  const MinMaxProfile profile = compute_bounds(p, BoundsKind::kBasic);
  MaximalNestedFilter f(7, profile);
  LRStack stack(kLMinusRPlus, 9);
  std::vector<Interval> out;
  lr_search(profile, stack, f, out);
  EXPECT_EQ(out, (std::vector<Interval>{{3, 6}, {1, 3}}));
  EXPECT_EQ(f.run_end(5), 7);
  EXPECT_EQ(f.run_end(3), 3);
  EXPECT_EQ(f.run_end(2), 3);
}

TEST(MaximalNestedFilter, LeftExtensionSuppressesEmission) {
  const ProblemInstance p = testing::make_instance({{1, 2, 3}, {1, 3, 2}});
  EXPECT_EQ(search_set(p, IntervalClass::kNested), intervals({{1, 3}, {2, 3}}));
  EXPECT_EQ(run(p, IntervalClass::kMaximalNested).intervals, (std::vector<Interval>{{1, 3}}));
}

TEST(ConservedFilter, PerIterationEmissions) {
  const ProblemInstance p = example_two();
  ConservedFilter f(p, false);
  Emissions e = emissions_by_t(p, BoundsKind::kConserved, f);
  EXPECT_TRUE(e[4].empty());
  EXPECT_EQ(e[2], (std::vector<Interval>{{2, 3}}));
  EXPECT_EQ(e[1], (std::vector<Interval>{{1, 7}}));
}

TEST(Position, Examples) {
  const ProblemInstance p = example_two();
  EXPECT_FALSE(position_consistent(p, 4));
  EXPECT_TRUE(position_consistent(p, 2));
  EXPECT_TRUE(position_consistent(p, 1));
  const ProblemInstance id = testing::identity_copies(6, 3);
  for (int t = 1; t < 6; ++t) EXPECT_TRUE(position_consistent(id, t));
}

TEST(SignGroups, GroupsBySignColumn) {
  const ProblemInstance p = testing::make_instance(
      {{1, 2, 3, 4, 5}, {1, -2, 3, -4, 5}, {1, -2, -3, -4, 5}});
  const std::vector<int> g = sign_groups(p);
  EXPECT_EQ(g[1], g[5]);
  EXPECT_EQ(g[2], g[4]);
  EXPECT_NE(g[1], g[2]);
  EXPECT_NE(g[1], g[3]);
  EXPECT_NE(g[2], g[3]);
}

TEST(SameSign, Examples) {
  const ProblemInstance mixed = testing::make_instance({{1, 2, 3}, {1, -2, 3}});
  EXPECT_TRUE(run(mixed, IntervalClass::kSameSignCommon).intervals.empty());

  const ProblemInstance tail = testing::make_instance({{1, 2, 3}, {1, 2, -3}});
  const std::vector<int> x = sign_change_bounds(tail);
  EXPECT_EQ(x[1], 3);
  EXPECT_EQ(x[2], 3);
  EXPECT_EQ(run(tail, IntervalClass::kSameSignCommon).intervals, (std::vector<Interval>{{1, 2}}));

  const ProblemInstance positive = example_one();
  EXPECT_EQ(run(positive, IntervalClass::kSameSignCommon).intervals,
            run(positive, IntervalClass::kCommon).intervals);
}

TEST(IrreducibleCommonFilter, StripSkipsToNextTrustyElement) {
  const ProblemInstance p = example_one();
  IrreducibleCommonFilter f(7);
  int nextt_of_six = -2;
  const MinMaxProfile profile = compute_bounds(p, BoundsKind::kBasic);
  LRStack stack(kLMinusRPlus, 9);
  std::vector<Interval> out;
  SearchOptions options;
  options.observer = [&](int t, const LRStack& s, std::span<const Interval>) {
    if (t == 2) nextt_of_six = f.nextt(s, 6);
  };
  lr_search(profile, stack, f, out, options);
  EXPECT_EQ(nextt_of_six, 7);
  EXPECT_TRUE(f.untrusty(5));
  EXPECT_TRUE(f.untrusty(6));
  EXPECT_TRUE(f.pending().empty());
}

TEST(Search, EmissionOrderAndReadOnlyFilters) {
  std::mt19937_64 rng(99);
  SearchOptions options;
  options.check_stack = true;
  options.check_filter_readonly = true;
  for (int round = 0; round < 100; ++round) {
    for (IntervalClass cls : kAllIntervalClasses) {
      const auto c = testing::random_case(rng, cls, 25, 4);
      const IntervalReport r = run(c.instance, cls, options);
      for (std::size_t i = 1; i < r.intervals.size(); ++i) {
        const Interval& a = r.intervals[i - 1];
        const Interval& b = r.intervals[i];
        ASSERT_TRUE(a.t > b.t || (a.t == b.t && a.x < b.x)) << to_string(cls);
      }
    }
  }
}

}  // namespace
}  // namespace lrsearch
