#pragma once

#include <span>
#include <vector>

#include "lrsearch/instance.hpp"
#include "lrsearch/lr_stack.hpp"

namespace lrsearch {

// Inclusive position range [q1, q2] of an array, with 0 <= q1 < q2 <= n.
// Position 0 is the sentinel slot the range-extremum sweep prepends.
struct Query {
  int q1 = 0;
  int q2 = 0;

  friend bool operator==(const Query&, const Query&) = default;
};

using QuerySet = std::vector<Query>;

// Indices of `queries` ordered lexicographically by (q2, q1). Two counting
// sort passes, O(n + |Q|); keys must lie in [0, n].
std::vector<int> sort_queries(std::span<const Query> queries, int n);

// answer[i] = min{values[h] : q1 <= h <= q2} with positions 1-based and
// position 0 holding max(values) + 1. Runs the offline sweep over an L-R-
// stack in O(n + |Q|) up to the union-find inverse-Ackermann factor. Works
// for arrays with repeats too. Throws Error{kQueryOutOfRange, kOutOfRange}.
std::vector<int> compute_inf(std::span<const int> values, std::span<const Query> queries);

// Mirror of compute_inf taking maxima; position 0 holds 0, so values must be
// positive.
std::vector<int> compute_sup(std::span<const int> values, std::span<const Query> queries);

// One query per t in [1, n-1]: the position range delimited by elements t and
// t+1. Returned in t order, so answer[t - 1] belongs to t.
QuerySet queries_for_permutation(const SignedPermutation& perm);

// queries_for_permutation for every permutation but the reference one.
std::vector<QuerySet> queries_for_profile(const ProblemInstance& instance);

enum class BoundsKind {
  kBasic,      // b = m, B = M
  kConserved,  // b, B widened by one unless the extremum is t (resp. t+1)
};

constexpr BoundsKind bounds_kind(IntervalClass cls) noexcept {
  return needs_conserved_endpoints(cls) ? BoundsKind::kConserved : BoundsKind::kBasic;
}

// Per-pair bounds [b_t, B_t] for t in [1, n-1]. Vectors are indexed by t
// directly; slot 0 is unused.
struct MinMaxProfile {
  int n = 0;
  std::vector<int> lower;  // b_t
  std::vector<int> upper;  // B_t
  // m_t and M_t; filled only when diagnostics were requested.
  std::vector<int> min_values;
  std::vector<int> max_values;
};

// Folds the extrema of every permutation into the profile one permutation at
// a time, so peak extra space stays O(n).
MinMaxProfile compute_bounds(const ProblemInstance& instance, BoundsKind kind,
                             bool diagnostics = false);

inline MinMaxProfile compute_bounds(const ProblemInstance& instance, IntervalClass cls,
                                    bool diagnostics = false) {
  return compute_bounds(instance, bounds_kind(cls), diagnostics);
}

}  // namespace lrsearch
