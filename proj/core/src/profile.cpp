#include "lrsearch/profile.hpp"

#include <algorithm>
#include <string>

namespace lrsearch {

namespace {

void check_queries(std::span<const Query> queries, int n) {
  for (const Query& q : queries) {
    if (q.q1 < 0 || q.q1 >= q.q2 || q.q2 > n) {
      throw Error(ErrorCode::kQueryOutOfRange,
                  "query (" + std::to_string(q.q1) + ", " + std::to_string(q.q2) +
                      ") outside 0 <= q1 < q2 <= " + std::to_string(n));
    }
  }
}

// Shared sweep for both extrema. The L stack keeps, for every still-open
// left position, the best value seen so far; find_l(q1) reads it back.
template <LRStackType kType, class Emit>
void sweep(std::span<const int> values, std::span<const Query> queries, int sentinel,
           int universe, Emit&& emit) {
  const int n = static_cast<int>(values.size());
  check_queries(queries, n);
  const bool presorted = std::is_sorted(
      queries.begin(), queries.end(),
      [](const Query& x, const Query& y) { return x.q2 != y.q2 ? x.q2 < y.q2 : x.q1 < y.q1; });
  std::vector<int> order;
  if (!presorted) order = sort_queries(queries, n);
  auto index = [&](std::size_t j) {
    return presorted ? j : static_cast<std::size_t>(order[j]);
  };

  LRStack stack(kType, universe, FindSupport::kEnabled);
  std::size_t next = 0;
  for (int h = 0; h <= n; ++h) {
    const int p = h == 0 ? sentinel : values[static_cast<std::size_t>(h - 1)];
    stack.pop_l(p);
    stack.push_lr(p, h);
    while (next < queries.size() && queries[index(next)].q2 == h) {
      const std::size_t i = index(next);
      emit(i, stack.find_l(queries[i].q1));
      ++next;
    }
  }
}

template <LRStackType kType>
std::vector<int> sweep(std::span<const int> values, std::span<const Query> queries,
                       int sentinel, int universe) {
  std::vector<int> answers(queries.size());
  sweep<kType>(values, queries, sentinel, universe,
               [&answers](std::size_t i, int x) { answers[i] = x; });
  return answers;
}

struct Bounds {
  int lo;
  int hi;
};

// Same queries as queries_for_permutation, emitted by increasing (q2, q1)
// so the sweep can skip its sort. owner[j] is the t of query j.
QuerySet sweep_ordered_queries(const SignedPermutation& perm, std::vector<int>& owner) {
  const int n = perm.size();
  QuerySet out;
  out.reserve(static_cast<std::size_t>(std::max(n - 1, 0)));
  owner.clear();
  owner.reserve(out.capacity());
  const std::span<const int> values = perm.values();
  for (int h = 1; h <= n; ++h) {
    const int e = values[static_cast<std::size_t>(h - 1)];
    const int left = e > 1 ? perm.position(e - 1) : h;
    const int right = e < n ? perm.position(e + 1) : h;
    // Both partners may close here; the one further left comes first.
    if (left < h && right < h && right < left) {
      out.push_back({right, h});
      owner.push_back(e);
      out.push_back({left, h});
      owner.push_back(e - 1);
      continue;
    }
    if (left < h) {
      out.push_back({left, h});
      owner.push_back(e - 1);
    }
    if (right < h) {
      out.push_back({right, h});
      owner.push_back(e);
    }
  }
  return out;
}

}  // namespace

std::vector<int> sort_queries(std::span<const Query> queries, int n) {
  const std::size_t buckets = static_cast<std::size_t>(n) + 2;
  std::vector<int> by_q1(queries.size());
  std::vector<int> out(queries.size());
  std::vector<std::size_t> count(buckets, 0);

  for (const Query& q : queries) ++count[static_cast<std::size_t>(q.q1) + 1];
  for (std::size_t i = 1; i < buckets; ++i) count[i] += count[i - 1];
  for (std::size_t i = 0; i < queries.size(); ++i) {
    by_q1[count[static_cast<std::size_t>(queries[i].q1)]++] = static_cast<int>(i);
  }

  std::fill(count.begin(), count.end(), 0);
  for (const Query& q : queries) ++count[static_cast<std::size_t>(q.q2) + 1];
  for (std::size_t i = 1; i < buckets; ++i) count[i] += count[i - 1];
  for (int i : by_q1) {
    out[count[static_cast<std::size_t>(queries[static_cast<std::size_t>(i)].q2)]++] = i;
  }
  return out;
}

std::vector<int> compute_inf(std::span<const int> values, std::span<const Query> queries) {
  const int n = static_cast<int>(values.size());
  int top = n;
  for (int v : values) {
    if (v < 0) throw Error(ErrorCode::kOutOfRange, "negative array value");
    top = std::max(top, v);
  }
  return sweep<kLMinusRMinus>(values, queries, top + 1, top + 2);
}

std::vector<int> compute_sup(std::span<const int> values, std::span<const Query> queries) {
  const int n = static_cast<int>(values.size());
  int top = n;
  for (int v : values) {
    if (v < 1) throw Error(ErrorCode::kOutOfRange, "compute_sup needs positive values");
    top = std::max(top, v);
  }
  return sweep<kLPlusRMinus>(values, queries, 0, top + 2);
}

QuerySet queries_for_permutation(const SignedPermutation& perm) {
  QuerySet out;
  const int n = perm.size();
  out.reserve(static_cast<std::size_t>(std::max(n - 1, 0)));
  for (int t = 1; t < n; ++t) {
    const int i = perm.position(t);
    const int j = perm.position(t + 1);
    out.push_back({std::min(i, j), std::max(i, j)});
  }
  return out;
}

std::vector<QuerySet> queries_for_profile(const ProblemInstance& instance) {
  std::vector<QuerySet> out;
  for (int k = 1; k < instance.count(); ++k) {
    out.push_back(queries_for_permutation(instance.perm(k)));
  }
  return out;
}

MinMaxProfile compute_bounds(const ProblemInstance& instance, BoundsKind kind,
                             bool diagnostics) {
  const int n = instance.size();
  MinMaxProfile profile;
  profile.n = n;
  profile.lower.assign(static_cast<std::size_t>(n), 0);
  profile.upper.assign(static_cast<std::size_t>(n), 0);
  // The reference permutation is the identity: its extrema are t and t+1,
  // which is also what both bound settings give for it.
  for (int t = 1; t < n; ++t) {
    profile.lower[static_cast<std::size_t>(t)] = t;
    profile.upper[static_cast<std::size_t>(t)] = t + 1;
  }
  if (diagnostics) {
    profile.min_values = profile.lower;
    profile.max_values = profile.upper;
  }

  if (instance.count() < 2) return profile;
  std::vector<Bounds> acc(static_cast<std::size_t>(n));
  for (int t = 1; t < n; ++t) acc[static_cast<std::size_t>(t)] = {t, t + 1};
  std::vector<int> owner;
  for (int k = 1; k < instance.count(); ++k) {
    const SignedPermutation& perm = instance.perm(k);
    const QuerySet queries = sweep_ordered_queries(perm, owner);
    const std::vector<int> mins = sweep<kLMinusRMinus>(perm.values(), queries, n + 1, n + 2);
    const std::vector<int> maxs = sweep<kLPlusRMinus>(perm.values(), queries, 0, n + 2);
    for (std::size_t j = 0; j < queries.size(); ++j) {
      const int t = owner[j];
      const auto i = static_cast<std::size_t>(t);
      const int m = mins[j];
      const int big_m = maxs[j];
      int lo = m;
      int hi = big_m;
      if (kind == BoundsKind::kConserved) {
        if (m != t) lo = m - 1;
        if (big_m != t + 1) hi = big_m + 1;
      }
      acc[i].lo = std::min(acc[i].lo, lo);
      acc[i].hi = std::max(acc[i].hi, hi);
      if (diagnostics) {
        profile.min_values[i] = std::min(profile.min_values[i], m);
        profile.max_values[i] = std::max(profile.max_values[i], big_m);
      }
    }
  }
  for (int t = 1; t < n; ++t) {
    const auto i = static_cast<std::size_t>(t);
    profile.lower[i] = acc[i].lo;
    profile.upper[i] = acc[i].hi;
  }
  return profile;
}

}  // namespace lrsearch
