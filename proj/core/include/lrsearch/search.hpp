#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "lrsearch/instance.hpp"
#include "lrsearch/lr_stack.hpp"
#include "lrsearch/profile.hpp"

namespace lrsearch {

// Intervals of one class in emission order: t descending, x ascending
// within a t.
struct IntervalReport {
  IntervalClass cls = IntervalClass::kCommon;
  int n = 0;
  int k = 0;
  std::vector<Interval> intervals;
  // Push/pop tallies of the search stack (the range-extremum sweeps of the
  // profile are not included).
  OpCounters search_ops;

  std::size_t count() const noexcept { return intervals.size(); }
};

// Called once per loop iteration, after the filter, with the intervals the
// filter emitted for t.
using IterationObserver =
    std::function<void(int t, const LRStack& stack, std::span<const Interval> emitted)>;

struct SearchOptions {
  // Full LR-stack invariant scan before every filter call. O(n) per step.
  bool check_stack = false;
  // Fingerprint L, R and rtop around every filter call and throw
  // std::logic_error if a filter changed them. O(n) per step.
  bool check_filter_readonly = false;
  IterationObserver observer;
};

// Finds every interval of `cls`. The instance must be normalized and
// validated for the class (see require_ready).
IntervalReport run(const ProblemInstance& instance, IntervalClass cls,
                   const SearchOptions& options = {});

// The unfiltered candidate set: every (t..x) with x in Set_R(t) at the end of
// iteration t, for the given bound setting. With basic bounds these are the
// common intervals.
std::vector<Interval> run_candidates(const ProblemInstance& instance, BoundsKind kind,
                                     const SearchOptions& options = {});

// True iff for every permutation, t is positive and precedes t+1, or t is
// negative and follows t+1. O(K).
bool position_consistent(const ProblemInstance& instance, int t);

// Group id per element (slot 0 unused): two elements share a group iff they
// carry the same sign in every permutation. Radix sort over the sign columns,
// O(Kn).
std::vector<int> sign_groups(const ProblemInstance& instance);

// X_t for t in [1, n-1] (slot 0 unused): the smallest x > t whose sign differs
// from the sign of t in some permutation, or n+1.
std::vector<int> sign_change_bounds(const ProblemInstance& instance);

}  // namespace lrsearch
