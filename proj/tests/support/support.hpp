#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cli/cli.hpp"
#include "lrsearch/lrsearch.hpp"

namespace lrsearch::testing {

inline ProblemInstance make_instance(std::initializer_list<std::initializer_list<int>> rows,
                                     IntervalClass cls = IntervalClass::kCommon) {
  std::vector<RawSequence> raw;
  for (const auto& row : rows) raw.emplace_back(row);
  return validate(raw, cls);
}

// {Id_7, (7 2 1 3 6 4 5)}
inline ProblemInstance example_one() {
  return make_instance({{1, 2, 3, 4, 5, 6, 7}, {7, 2, 1, 3, 6, 4, 5}});
}

// {Id_7, (1 -3 -2 6 -4 -5 7)}
inline ProblemInstance example_two(IntervalClass cls = IntervalClass::kConserved) {
  return make_instance({{1, 2, 3, 4, 5, 6, 7}, {1, -3, -2, 6, -4, -5, 7}}, cls);
}

inline ProblemInstance identity_copies(int n, int k) {
  std::vector<RawSequence> raw(static_cast<std::size_t>(k), RawSequence(static_cast<std::size_t>(n)));
  for (auto& row : raw) {
    for (int i = 0; i < n; ++i) row[static_cast<std::size_t>(i)] = i + 1;
  }
  return validate(raw, IntervalClass::kConserved);
}

inline std::vector<Interval> intervals(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Interval> out;
  for (const auto& [t, x] : pairs) out.push_back({t, x});
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Interval> sorted(std::vector<Interval> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<Interval> search_set(const ProblemInstance& instance, IntervalClass cls) {
  return sorted(run(instance, cls).intervals);
}

inline bool subset(const std::vector<Interval>& small, const std::vector<Interval>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline std::string show(const std::vector<Interval>& v) {
  std::string out = "{";
  for (const Interval& iv : v) {
    out += "(" + std::to_string(iv.t) + ".." + std::to_string(iv.x) + ")";
  }
  return out + "}";
}

// Random instance with n in [2, max_n] and K in [1, max_k], validated for cls.
struct RandomCase {
  std::vector<RawSequence> raw;
  ProblemInstance instance;
};

inline RandomCase random_case(std::mt19937_64& rng, IntervalClass cls, int max_n = 12,
                              int max_k = 4) {
  const int n = std::uniform_int_distribution<int>(2, max_n)(rng);
  const int k = std::uniform_int_distribution<int>(1, max_k)(rng);
  RandomCase c;
  c.raw = cli::random_instance(rng, n, k, needs_conserved_endpoints(cls));
  c.instance = validate(c.raw, cls);
  return c;
}

// Uniform permutation of [n] as unsigned values.
inline std::vector<int> random_values(std::mt19937_64& rng, int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

}  // namespace lrsearch::testing
