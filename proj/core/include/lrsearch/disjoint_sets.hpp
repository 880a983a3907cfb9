#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace lrsearch {

// Union-find with union by size and path halving over the integers
// [0, universe). Slots must be activated with make() before use; make() on a
// slot that already belongs to a set resets it to a singleton, so callers
// only do that for elements that were never united before.
class DisjointSets {
 public:
  DisjointSets() = default;
  explicit DisjointSets(int universe)
      : parent_(static_cast<std::size_t>(universe)),
        size_(static_cast<std::size_t>(universe), 1) {
    for (int i = 0; i < universe; ++i) parent_[static_cast<std::size_t>(i)] = i;
  }

  int universe() const noexcept { return static_cast<int>(parent_.size()); }

  void make(int x) noexcept {
    parent_[idx(x)] = x;
    size_[idx(x)] = 1;
  }

  int find(int x) noexcept {
    while (parent_[idx(x)] != x) {
      parent_[idx(x)] = parent_[idx(parent_[idx(x)])];
      x = parent_[idx(x)];
    }
    return x;
  }

  // Returns the root of the merged set.
  int unite(int x, int y) noexcept {
    x = find(x);
    y = find(y);
    if (x == y) return x;
    if (size_[idx(x)] < size_[idx(y)]) std::swap(x, y);
    parent_[idx(y)] = x;
    size_[idx(x)] += size_[idx(y)];
    return x;
  }

 private:
  static std::size_t idx(int x) noexcept { return static_cast<std::size_t>(x); }

  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace lrsearch
