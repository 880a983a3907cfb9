#pragma once

#include <vector>

#include "lrsearch/instance.hpp"

// Brute-force class predicates straight from the definitions. Independent of
// the stack, profile and search code; used as ground truth in tests and by
// `lrsearch search --check-oracle`.

namespace lrsearch {

inline constexpr int kDefaultBruteForceBound = 64;

struct OracleReport {
  IntervalClass cls = IntervalClass::kCommon;
  std::vector<Interval> intervals;  // sorted, no duplicates
};

// All functions below take a normalized instance (kNotNormalized otherwise)
// with n <= bound (kBruteForceBoundExceeded otherwise) and return sorted
// intervals.

std::vector<Interval> oracle_common(const ProblemInstance& instance,
                                    int bound = kDefaultBruteForceBound);
std::vector<Interval> oracle_nested(const ProblemInstance& instance,
                                    int bound = kDefaultBruteForceBound);
std::vector<Interval> oracle_maximal_nested(const ProblemInstance& instance,
                                            int bound = kDefaultBruteForceBound);
// Checks the delimiter conditions against the first permutation; does not
// require the conserved endpoints.
std::vector<Interval> oracle_conserved(const ProblemInstance& instance,
                                       int bound = kDefaultBruteForceBound);
std::vector<Interval> oracle_irreducible_conserved(const ProblemInstance& instance,
                                                   int bound = kDefaultBruteForceBound);
std::vector<Interval> oracle_irreducible_common(const ProblemInstance& instance,
                                                int bound = kDefaultBruteForceBound);
std::vector<Interval> oracle_same_sign(const ProblemInstance& instance,
                                       int bound = kDefaultBruteForceBound);

OracleReport oracle(const ProblemInstance& instance, IntervalClass cls,
                    int bound = kDefaultBruteForceBound);

}  // namespace lrsearch
