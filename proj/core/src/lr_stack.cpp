#include "lrsearch/lr_stack.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

#include "lrsearch/error.hpp"

namespace lrsearch {

LRStack::LRStack(LRStackType type, int universe, FindSupport find)
    : type_(type),
      find_enabled_(find == FindSupport::kEnabled),
      universe_(universe),
      r_(at(universe)),
      r_on_((at(universe) + 63) / 64, 0) {
  l_.reserve(at(universe));
  if (find_enabled_) {
    marks_ = SuccessorSet(universe);
    mark_slot_.assign(at(universe), kNil);
  } else {
    l_slot_.assign(at(universe), kNil);
  }
}

int LRStack::search_l(int a) const noexcept {
  // Bottom to top, L runs away from the values that block it.
  const bool ascending = type_.l == StackOrder::kDecreasing;
  const auto it = std::lower_bound(l_.begin(), l_.end(), a, [ascending](const LEntry& e, int v) {
    return ascending ? e.value < v : e.value > v;
  });
  return it != l_.end() && it->value == a ? static_cast<int>(it - l_.begin()) : kNil;
}

void LRStack::set_rtop(std::size_t slot, int b) {
  LEntry& entry = l_[slot];
  if (find_enabled_) {
    if (entry.rtop != kNil) marks_.erase(entry.rtop);
    marks_.insert(b);
    mark_slot_[at(b)] = static_cast<int>(slot);
  }
  entry.rtop = b;
}

void LRStack::push_l_raw(int a) {
  if (!find_enabled_) l_slot_[at(a)] = static_cast<int>(l_.size());
  l_.push_back({a, kNil});
  ++counters_.pushes_l;
}

void LRStack::push_r_raw(int b) {
  RNode& node = r_[at(b)];
  node.below = top_r_;
  node.above = kNil;
  r_on_[at(b) >> 6] |= std::uint64_t{1} << (at(b) & 63);
  if (top_r_ == kNil) {
    bottom_r_ = b;
  } else {
    r_[at(top_r_)].above = b;
  }
  top_r_ = b;
  ++size_r_;
  ++counters_.pushes_r;
}

void LRStack::drop_top_l() {
  if (find_enabled_ && l_.back().rtop != kNil) marks_.erase(l_.back().rtop);
  l_.pop_back();
  ++counters_.pops_l;
}

void LRStack::drop_top_r() {
  const int b = top_r_;
  RNode& node = r_[at(b)];
  top_r_ = node.below;
  node = RNode{};
  r_on_[at(b) >> 6] &= ~(std::uint64_t{1} << (at(b) & 63));
  if (top_r_ == kNil) {
    bottom_r_ = kNil;
  } else {
    r_[at(top_r_)].above = kNil;
  }
  --size_r_;
  ++counters_.pops_r;
}

void LRStack::after_op() {
#if defined(LRSEARCH_PARANOID)
  check_invariants();
#endif
}

void LRStack::pop_l(int a) {
  bool discarded = false;
  while (!l_.empty() && l_blocks(l_.back().value, a)) {
    drop_top_l();
    discarded = true;
  }
  if (!discarded) {
    after_op();
    return;
  }
  // If a was already on top it absorbs the discarded sets above its own.
  if (top_l() != a) push_l_raw(a);
  set_rtop(l_.size() - 1, top_r_);
  after_op();
}

void LRStack::pop_r(int b) {
  bool discarded = false;
  while (top_r_ != kNil && r_blocks(top_r_, b)) {
    drop_top_r();
    discarded = true;
  }
  if (!discarded) {
    after_op();
    return;
  }
  // Only the sets at the top of L can have lost elements.
  while (!l_.empty()) {
    LEntry& top = l_.back();
    if (on_r(top.rtop)) break;
    bool emptied = top_r_ == kNil;
    if (l_.size() > 1) {
      const int below_rtop = l_[l_.size() - 2].rtop;
      emptied = !on_r(below_rtop) || below_rtop == top_r_;
    }
    if (!emptied) {
      set_rtop(l_.size() - 1, top_r_);
      break;
    }
    drop_top_l();
  }
  after_op();
}

void LRStack::push_lr(int a, int b) {
  const int top_a = top_l();
  assert(top_a == kNil || top_a == a || !l_blocks(top_a, a));
  assert(top_r_ == kNil || top_r_ == b || !r_blocks(top_r_, b));
  const bool push_a = top_a != a;
  const bool push_b = top_r_ != b;
  // A fresh L-element needs a fresh R-element, or rtop stops being injective.
  assert(!push_a || push_b || top_a == kNil);

  if (push_b) push_r_raw(b);
  if (push_a) push_l_raw(a);
  set_rtop(l_.size() - 1, b);
  after_op();
}

int LRStack::find_l(int b) {
  if (!find_enabled_) throw std::logic_error("find_l needs FindSupport::kEnabled");
  if (b < 0 || b >= universe() || !on_r(b)) {
    throw Error(ErrorCode::kNotOnR, "element " + std::to_string(b) + " is not on R");
  }
  const int mark = type_.r == StackOrder::kDecreasing ? marks_.next(b) : marks_.prev(b);
  return l_[at(mark_slot_[at(mark)])].value;
}

std::vector<int> LRStack::l_elements() const {
  std::vector<int> out;
  out.reserve(l_.size());
  for (auto it = l_.rbegin(); it != l_.rend(); ++it) out.push_back(it->value);
  return out;
}

std::vector<int> LRStack::r_elements() const {
  std::vector<int> out;
  out.reserve(size_r_);
  for (int b = top_r_; b != kNil; b = r_[at(b)].below) out.push_back(b);
  return out;
}

std::vector<int> LRStack::set_r(int a) const {
  std::vector<int> out;
  if (!on_l(a)) return out;
  const int last = rbot(a);
  for (int b = rtop(a); b != kNil; b = r_[at(b)].below) {
    out.push_back(b);
    if (b == last) break;
  }
  return out;
}

std::uint64_t LRStack::fingerprint() const {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](std::int64_t v) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 1099511628211ull;
  };
  for (auto it = l_.rbegin(); it != l_.rend(); ++it) {
    mix(it->value);
    mix(it->rtop);
  }
  mix(-2);
  for (int b = top_r_; b != kNil; b = r_[at(b)].below) mix(b);
  return h;
}

void LRStack::check_invariants() {
  auto fail = [](const std::string& what) { throw std::logic_error("LRStack: " + what); };

  const std::vector<int> l = l_elements();
  const std::vector<int> r = r_elements();
  if (r.size() != size_r_) fail("size counters out of sync");
  if (l.empty() != r.empty()) fail("exactly one of L and R is empty");

  for (std::size_t i = 1; i < l.size(); ++i) {
    if (!l_blocks(l[i - 1], l[i])) fail("L is not strictly monotone");
  }
  for (std::size_t i = 1; i < r.size(); ++i) {
    if (!r_blocks(r[i - 1], r[i])) fail("R is not strictly monotone");
  }

  std::vector<int> r_index(at(universe()), -1);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!on_r(r[i])) fail("R member not flagged");
    r_index[at(r[i])] = static_cast<int>(i);
    const int up = i == 0 ? kNil : r[i - 1];
    if (r_[at(r[i])].above != up) fail("above_r link broken");
  }
  if (!r.empty() && bottom_r_ != r.back()) fail("bottom_r is stale");

  int previous = -1;
  for (std::size_t i = 0; i < l.size(); ++i) {
    const int a = l[i];
    if (slot_l(a) != static_cast<int>(l.size() - 1 - i)) fail("L slot map is stale");
    const int target = rtop(a);
    if (target == kNil || !on_r(target)) fail("rtop points off R");
    if (r_index[at(target)] <= previous) fail("rtop is not order-preserving");
    previous = r_index[at(target)];
  }
  if (!l.empty() && rtop(l.front()) != top_r_) fail("rtop(top L) != top R");

  if (find_enabled_) {
    std::size_t marks = 0;
    for (int m = marks_.next(0); m != SuccessorSet::kNone; m = marks_.next(m + 1)) ++marks;
    if (marks != l.size()) fail("stray find marks");
    for (int a : l) {
      for (int b : set_r(a)) {
        if (find_l(b) != a) fail("find_l disagrees with Set_R");
      }
    }
  }
}

}  // namespace lrsearch
