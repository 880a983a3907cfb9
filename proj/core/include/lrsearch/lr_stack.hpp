#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lrsearch/successor_set.hpp"

namespace lrsearch {

// Order of the values on one stack, read from top to bottom.
enum class StackOrder {
  kIncreasing,  // "+": the top holds the smallest value
  kDecreasing,  // "-": the top holds the largest value
};

struct LRStackType {
  StackOrder l;
  StackOrder r;

  friend constexpr bool operator==(LRStackType, LRStackType) = default;
};

inline constexpr LRStackType kLMinusRPlus{StackOrder::kDecreasing, StackOrder::kIncreasing};
inline constexpr LRStackType kLMinusRMinus{StackOrder::kDecreasing, StackOrder::kDecreasing};
inline constexpr LRStackType kLPlusRPlus{StackOrder::kIncreasing, StackOrder::kIncreasing};
inline constexpr LRStackType kLPlusRMinus{StackOrder::kIncreasing, StackOrder::kDecreasing};

// Whether find_l() is available. It costs a bitmap over the set boundaries,
// so the search loop, which never asks for it, runs without.
enum class FindSupport { kDisabled, kEnabled };

struct OpCounters {
  std::uint64_t pushes_l = 0;
  std::uint64_t pushes_r = 0;
  std::uint64_t pops_l = 0;
  std::uint64_t pops_r = 0;

  std::uint64_t total_pushes() const noexcept { return pushes_l + pushes_r; }

  OpCounters& operator+=(const OpCounters& o) noexcept {
    pushes_l += o.pushes_l;
    pushes_r += o.pushes_r;
    pops_l += o.pops_l;
    pops_r += o.pops_r;
    return *this;
  }
  friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

/// Two monotone stacks L and R over the integers [0, universe) linked by an
/// order-preserving injection rtop from L-elements to R-elements.
///
/// For an L-element a with successor a' on L, Set_R(a) is the run of R from
/// rtop(a) included down to rtop(a') excluded; for the bottom of L it runs
/// to the bottom of R. The sets are never materialized: rtop(a) and rbot(a)
/// delimit them and next_r() walks them. Between operations the following
/// hold: L is empty iff R is empty, rtop(top_l()) == top_r(), and every
/// Set_R(a) is nonempty.
///
/// L is a dense array with a value-to-slot map and R an intrusive linked list
/// over an index array, so membership, adjacency and cursors are O(1). With
/// find support the slot map is dropped: lookups of L-elements below the top
/// binary-search the dense L instead, which keeps the range-extremum sweep
/// free of scattered writes. Each pop/push is O(1); pop_l and pop_r
/// are linear in the number of discarded elements.
class LRStack {
 public:
  static constexpr int kNil = -1;

  LRStack(LRStackType type, int universe, FindSupport find = FindSupport::kDisabled);

  LRStackType type() const noexcept { return type_; }
  int universe() const noexcept { return universe_; }

  // Discards every L-element that blocks a. If at least one was discarded,
  // a ends on top of L (pushed unless it was already there) and rtop(a) is
  // set to top_r(), absorbing the sets of the discarded elements.
  void pop_l(int a);

  // Discards every R-element that blocks b, moves the cursors that pointed at
  // discarded elements and drops L-elements whose set became empty. Never
  // pushes b.
  void pop_r(int b);

  // Pushes a on L and b on R unless they are already on top, then points
  // rtop(top_l()) at top_r(). Requires that nothing on L blocks a and nothing
  // on R blocks b.
  void push_lr(int a, int b);

  // The L-element whose set contains b: the owner of the nearest rtop target
  // at or above b on R. Needs FindSupport::kEnabled. Throws Error{kNotOnR}
  // when b is not on R.
  int find_l(int b);

  int top_l() const noexcept { return l_.empty() ? kNil : l_.back().value; }
  int top_r() const noexcept { return top_r_; }
  int bottom_r() const noexcept { return bottom_r_; }
  // Element right below u on its stack, kNil at the bottom.
  int next_l(int a) const noexcept {
    const int s = slot_l(a);
    return s > 0 ? l_[at(s - 1)].value : kNil;
  }
  int next_r(int b) const noexcept { return r_[at(b)].below; }
  bool on_l(int a) const noexcept { return slot_l(a) != kNil; }
  bool on_r(int b) const noexcept { return (r_on_[at(b) >> 6] >> (at(b) & 63)) & 1u; }

  // First element of Set_R(a), kNil if a is not on L.
  int rtop(int a) const noexcept {
    const int s = slot_l(a);
    return s == kNil ? kNil : l_[at(s)].rtop;
  }
  // Last element of Set_R(a), kNil if a is not on L.
  int rbot(int a) const noexcept {
    const int s = slot_l(a);
    if (s == kNil) return kNil;
    return s == 0 ? bottom_r_ : r_[at(l_[at(s - 1)].rtop)].above;
  }

  std::size_t size_l() const noexcept { return l_.size(); }
  std::size_t size_r() const noexcept { return size_r_; }
  const OpCounters& counters() const noexcept { return counters_; }

  // Diagnostics. These walk the whole structure.
  std::vector<int> l_elements() const;  // top first
  std::vector<int> r_elements() const;  // top first
  std::vector<int> set_r(int a) const;  // Set_R(a) top first
  std::uint64_t fingerprint() const;
  // Throws std::logic_error describing the first broken invariant.
  void check_invariants();

 private:
  static std::size_t at(int x) noexcept { return static_cast<std::size_t>(x); }

  bool l_blocks(int above, int a) const noexcept {
    return type_.l == StackOrder::kDecreasing ? above > a : above < a;
  }
  bool r_blocks(int above, int b) const noexcept {
    return type_.r == StackOrder::kIncreasing ? above < b : above > b;
  }

  int slot_l(int a) const noexcept {
    if (!l_.empty() && l_.back().value == a) return static_cast<int>(l_.size() - 1);
    if (l_slot_.empty()) return search_l(a);
    const int s = l_slot_[at(a)];
    return s >= 0 && at(s) < l_.size() && l_[at(s)].value == a ? s : kNil;
  }
  int search_l(int a) const noexcept;

  void push_l_raw(int a);
  void push_r_raw(int b);
  void drop_top_l();
  void drop_top_r();
  void after_op();

  // L is stored bottom first in l_. l_slot_ maps a value to its index there
  // and is left stale on pop; slot_l() validates it against l_. Empty when
  // find is enabled.
  struct LEntry {
    int value;
    int rtop;
  };
  struct RNode {
    int below = kNil;
    int above = kNil;
  };
  void set_rtop(std::size_t slot, int b);

  LRStackType type_;
  bool find_enabled_;
  int universe_;

  std::vector<LEntry> l_;
  std::vector<int> l_slot_;
  std::vector<RNode> r_;
  std::vector<std::uint64_t> r_on_;  // membership bitmap, stays cache resident
  // With find enabled: the rtop targets, and the l_ slot owning each.
  SuccessorSet marks_;
  std::vector<int> mark_slot_;
  int top_r_ = kNil;
  int bottom_r_ = kNil;
  std::size_t size_r_ = 0;

  OpCounters counters_;
};

}  // namespace lrsearch
