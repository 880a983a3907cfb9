#pragma once

// Per-class filters for the LR-search loop. Each filter reads the stack and
// keeps its own auxiliary arrays; none of them modifies the stack.
//
// Filter interface:
//   void after_push(const LRStack&, int t)  called right after push_lr(b_t, t+1)
//   void apply(const LRStack&, int t, std::vector<Interval>& out)
// apply() appends (t..x) with x ascending.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrsearch/disjoint_sets.hpp"
#include "lrsearch/instance.hpp"
#include "lrsearch/lr_stack.hpp"
#include "lrsearch/profile.hpp"
#include "lrsearch/search.hpp"

namespace lrsearch {

// Every element of Set_R(t).
class CommonFilter {
 public:
  void after_push(const LRStack&, int) noexcept {}
  void apply(const LRStack& stack, int t, std::vector<Interval>& out) const;
};

class NestedFilter {
 public:
  explicit NestedFilter(int n);

  void after_push(const LRStack&, int) noexcept {}
  void apply(const LRStack& stack, int t, std::vector<Interval>& out);

  // Largest x with (t+1..x) nested and x in Set_R(t+1) at the end of
  // iteration t+1, or 0.
  int w(int t) const noexcept { return w_[static_cast<std::size_t>(t)]; }

 private:
  std::vector<int> w_;
};

class MaximalNestedFilter {
 public:
  // Reads b_{t-1} and B_{t-1} from `profile`, which must outlive the filter.
  MaximalNestedFilter(int n, const MinMaxProfile& profile);

  void after_push(const LRStack& stack, int t);
  void apply(const LRStack& stack, int t, std::vector<Interval>& out);

  int w(int t) const noexcept { return w_[static_cast<std::size_t>(t)]; }
  // Last element of the run of consecutive integers on R starting at r, as
  // it was when r was pushed.
  int run_end(int r) const noexcept { return run_end_[static_cast<std::size_t>(r)]; }

 private:
  const MinMaxProfile& profile_;
  std::vector<int> w_;
  std::vector<int> run_end_;
};

// Conserved, or irreducible conserved when `irreducible` is set.
class ConservedFilter {
 public:
  ConservedFilter(const ProblemInstance& instance, bool irreducible);

  void after_push(const LRStack& stack, int t);
  void apply(const LRStack& stack, int t, std::vector<Interval>& out);

  // Topmost element of R in the sign group of t, kNil if none.
  int rtop_star(const LRStack& stack, int t);

 private:
  int first_live(const LRStack& stack, int group);

  const ProblemInstance& instance_;
  bool irreducible_;
  std::vector<int> group_;
  std::vector<int> first_;       // per group, topmost member on R (lazily cleaned)
  std::vector<int> chain_next_;  // next lower R-element of the same group
};

class SameSignFilter {
 public:
  explicit SameSignFilter(const ProblemInstance& instance);

  void after_push(const LRStack&, int) noexcept {}
  void apply(const LRStack& stack, int t, std::vector<Interval>& out) const;

  int bound(int t) const noexcept { return x_[static_cast<std::size_t>(t)]; }

 private:
  std::vector<int> x_;
};

class IrreducibleCommonFilter {
 public:
  explicit IrreducibleCommonFilter(int n);

  void after_push(const LRStack&, int) noexcept {}
  void apply(const LRStack& stack, int t, std::vector<Interval>& out);

  bool untrusty(int x) const noexcept { return untrusty_[static_cast<std::size_t>(x)] != 0; }
  // Next R-element worth testing after x: next_r(x) for a trusty x, the
  // element below the whole untrusty strip of x otherwise.
  int nextt(const LRStack& stack, int x);
  std::span<const int> pending() const noexcept { return s_; }

 private:
  void mark_untrusty(const LRStack& stack, int x);

  std::vector<int> s_;
  std::vector<unsigned char> untrusty_;
  DisjointSets strips_;
  std::vector<int> strip_max_;
  std::vector<int> strip_next_;
};

// The LR-search loop over precomputed bounds.
template <class Filter>
void lr_search(const MinMaxProfile& profile, LRStack& stack, Filter& filter,
               std::vector<Interval>& out, const SearchOptions& options = {}) {
  for (int t = profile.n - 1; t >= 1; --t) {
    const auto i = static_cast<std::size_t>(t);
    stack.pop_l(profile.lower[i]);
    stack.pop_r(profile.upper[i]);
    if (profile.upper[i] == t + 1) {
      stack.push_lr(profile.lower[i], t + 1);
      filter.after_push(stack, t);
    }
    if (options.check_stack) stack.check_invariants();
    const std::uint64_t before = options.check_filter_readonly ? stack.fingerprint() : 0;
    const std::size_t emitted_from = out.size();
    filter.apply(stack, t, out);
    if (options.check_filter_readonly && stack.fingerprint() != before) {
      throw std::logic_error("filter modified the LR-stack at t = " + std::to_string(t));
    }
    if (options.observer) {
      options.observer(t, stack, std::span<const Interval>(out).subspan(emitted_from));
    }
  }
}

}  // namespace lrsearch
