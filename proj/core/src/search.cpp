#include "lrsearch/search.hpp"

#include <algorithm>

#include "lrsearch/filters.hpp"

namespace lrsearch {

namespace {

constexpr int kNil = LRStack::kNil;

std::size_t at(int x) noexcept { return static_cast<std::size_t>(x); }

}  // namespace

void CommonFilter::apply(const LRStack& stack, int t, std::vector<Interval>& out) const {
  if (stack.top_l() != t) return;
  const int xbot = stack.rbot(t);
  for (int x = stack.rtop(t); x != kNil && x <= xbot; x = stack.next_r(x)) {
    out.push_back({t, x});
  }
}

NestedFilter::NestedFilter(int n) : w_(at(std::max(n, 1)), 0) {}

void NestedFilter::apply(const LRStack& stack, int t, std::vector<Interval>& out) {
  if (stack.top_l() != t) return;
  const int xtop = stack.rtop(t);
  const int xbot = stack.rbot(t);
  int& wt = w_[at(t)];
  if (xtop > wt) wt = 0;
  if (xtop != t + 1 && wt == 0) return;
  for (int x = xtop; x != kNil && x <= xbot; x = stack.next_r(x)) {
    if (x != t + 1 && x > wt && !stack.on_r(x - 1)) break;
    out.push_back({t, x});
    w_[at(t - 1)] = x;
  }
}

MaximalNestedFilter::MaximalNestedFilter(int n, const MinMaxProfile& profile)
    : profile_(profile), w_(at(std::max(n, 1)), 0), run_end_(at(n + 2), kNil) {}

void MaximalNestedFilter::after_push(const LRStack& stack, int t) {
  const int r = t + 1;
  const int below = stack.next_r(r);
  run_end_[at(r)] = below == r + 1 ? run_end_[at(below)] : r;
}

void MaximalNestedFilter::apply(const LRStack& stack, int t, std::vector<Interval>& out) {
  if (stack.top_l() != t) return;
  const int xtop = stack.rtop(t);
  const int xbot = stack.rbot(t);
  int& wt = w_[at(t)];
  if (xtop > wt) wt = 0;
  if (xtop != t + 1 && wt == 0) return;

  const int start = wt != 0 ? wt : xtop;
  const int y = std::min(run_end_[at(start)], xbot);
  w_[at(t - 1)] = y;

  const bool left_open =
      t == 1 || profile_.lower[at(t - 1)] < t - 1;
  int x = std::min(run_end_[at(xtop)], y);
  while (left_open || profile_.upper[at(t - 1)] > x) {
    out.push_back({t, x});
    if (x == y) break;
    x = std::min(run_end_[at(stack.next_r(x))], y);
  }
}

ConservedFilter::ConservedFilter(const ProblemInstance& instance, bool irreducible)
    : instance_(instance),
      irreducible_(irreducible),
      group_(sign_groups(instance)),
      first_(at(instance.size() + 1), kNil),
      chain_next_(at(instance.size() + 2), kNil) {}

int ConservedFilter::first_live(const LRStack& stack, int group) {
  int& f = first_[at(group)];
  while (f != kNil && !stack.on_r(f)) f = chain_next_[at(f)];
  return f;
}

void ConservedFilter::after_push(const LRStack& stack, int t) {
  const int r = t + 1;
  const int g = group_[at(r)];
  chain_next_[at(r)] = first_live(stack, g);
  first_[at(g)] = r;
}

int ConservedFilter::rtop_star(const LRStack& stack, int t) {
  return first_live(stack, group_[at(t)]);
}

void ConservedFilter::apply(const LRStack& stack, int t, std::vector<Interval>& out) {
  if (stack.top_l() != t) return;
  int x = rtop_star(stack, t);
  const int xbot = stack.rbot(t);
  if (x == kNil || x > xbot) return;
  if (!position_consistent(instance_, t)) return;
  if (irreducible_) {
    out.push_back({t, x});
    return;
  }
  for (; x != kNil && x <= xbot; x = chain_next_[at(x)]) out.push_back({t, x});
}

SameSignFilter::SameSignFilter(const ProblemInstance& instance)
    : x_(sign_change_bounds(instance)) {}

void SameSignFilter::apply(const LRStack& stack, int t, std::vector<Interval>& out) const {
  if (stack.top_l() != t) return;
  const int xbot = stack.rbot(t);
  const int limit = x_[at(t)];
  for (int x = stack.rtop(t); x != kNil && x <= xbot && x < limit; x = stack.next_r(x)) {
    out.push_back({t, x});
  }
}

IrreducibleCommonFilter::IrreducibleCommonFilter(int n)
    : untrusty_(at(n + 2), 0),
      strips_(n + 2),
      strip_max_(at(n + 2), kNil),
      strip_next_(at(n + 2), kNil) {}

int IrreducibleCommonFilter::nextt(const LRStack& stack, int x) {
  if (!untrusty_[at(x)]) return stack.next_r(x);
  return strip_next_[at(strips_.find(x))];
}

void IrreducibleCommonFilter::mark_untrusty(const LRStack& stack, int x) {
  if (untrusty_[at(x)]) return;
  untrusty_[at(x)] = 1;
  strips_.make(x);
  int top = x;
  if (x + 1 < static_cast<int>(untrusty_.size()) && stack.on_r(x + 1) && untrusty_[at(x + 1)]) {
    top = strip_max_[at(strips_.find(x + 1))];
    strips_.unite(x, x + 1);
  }
  if (x - 1 >= 0 && stack.on_r(x - 1) && untrusty_[at(x - 1)]) strips_.unite(x, x - 1);
  const int root = strips_.find(x);
  strip_max_[at(root)] = top;
  strip_next_[at(root)] = stack.next_r(top);
}

void IrreducibleCommonFilter::apply(const LRStack& stack, int t, std::vector<Interval>& out) {
  s_.push_back(t);
  if (stack.top_l() != t) return;
  const int xbot = stack.rbot(t);
  int x = stack.rtop(t);
  while (x != kNil && x <= xbot && !s_.empty() && (s_.back() < x || untrusty_[at(x)])) {
    if (s_.back() < x) {
      out.push_back({t, x});
      mark_untrusty(stack, x);
      while (!s_.empty() && s_.back() < x) s_.pop_back();
      x = stack.next_r(x);
    } else {
      x = nextt(stack, x);
    }
  }
}

bool position_consistent(const ProblemInstance& instance, int t) {
  for (const SignedPermutation& p : instance.perms()) {
    const bool before = p.position(t) < p.position(t + 1);
    if (p.negative(t) == before) return false;
  }
  return true;
}

std::vector<int> sign_groups(const ProblemInstance& instance) {
  const int n = instance.size();
  const int k = instance.count();
  std::vector<int> order(at(n));
  for (int e = 1; e <= n; ++e) order[at(e - 1)] = e;

  // LSD radix sort, one stable binary pass per sign column.
  for (int col = k - 1; col >= 1; --col) {
    const SignedPermutation& p = instance.perm(col);
    std::stable_partition(order.begin(), order.end(), [&p](int e) { return !p.negative(e); });
  }

  std::vector<int> group(at(n + 1), 0);
  int id = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0) {
      bool same = true;
      for (int col = 1; col < k && same; ++col) {
        same = instance.perm(col).negative(order[i]) == instance.perm(col).negative(order[i - 1]);
      }
      if (!same) ++id;
    }
    group[at(order[i])] = id;
  }
  return group;
}

std::vector<int> sign_change_bounds(const ProblemInstance& instance) {
  const int n = instance.size();
  std::vector<int> bound(at(std::max(n, 1)), n + 1);
  for (int col = 1; col < instance.count(); ++col) {
    const SignedPermutation& p = instance.perm(col);
    int x = n + 1;
    for (int t = n - 1; t >= 1; --t) {
      if (p.negative(t) != p.negative(t + 1)) x = t + 1;
      bound[at(t)] = std::min(bound[at(t)], x);
    }
  }
  return bound;
}

IntervalReport run(const ProblemInstance& instance, IntervalClass cls,
                   const SearchOptions& options) {
  require_ready(instance, cls);
  const int n = instance.size();
  const MinMaxProfile profile = compute_bounds(instance, cls);
  LRStack stack(kLMinusRPlus, n + 2);

  IntervalReport report;
  report.cls = cls;
  report.n = n;
  report.k = instance.count();

  auto go = [&](auto&& filter) { lr_search(profile, stack, filter, report.intervals, options); };
  switch (cls) {
    case IntervalClass::kCommon:
      go(CommonFilter{});
      break;
    case IntervalClass::kNested:
      go(NestedFilter(n));
      break;
    case IntervalClass::kMaximalNested:
      go(MaximalNestedFilter(n, profile));
      break;
    case IntervalClass::kConserved:
      go(ConservedFilter(instance, false));
      break;
    case IntervalClass::kIrreducibleConserved:
      go(ConservedFilter(instance, true));
      break;
    case IntervalClass::kSameSignCommon:
      go(SameSignFilter(instance));
      break;
    case IntervalClass::kIrreducibleCommon:
      go(IrreducibleCommonFilter(n));
      break;
  }
  report.search_ops = stack.counters();
  return report;
}

std::vector<Interval> run_candidates(const ProblemInstance& instance, BoundsKind kind,
                                     const SearchOptions& options) {
  require_ready(instance, IntervalClass::kCommon);
  const MinMaxProfile profile = compute_bounds(instance, kind);
  LRStack stack(kLMinusRPlus, instance.size() + 2);
  std::vector<Interval> out;
  CommonFilter filter;
  lr_search(profile, stack, filter, out, options);
  return out;
}

}  // namespace lrsearch
