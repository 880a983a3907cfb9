#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace lrsearch {

// Dynamic subset of [0, universe) as a 64-ary tree of bitmaps. Every
// operation touches one word per level, so four levels cover 2^24 values.
// The leaf level takes universe / 8 bytes.
class SuccessorSet {
 public:
  static constexpr int kNone = -1;

  SuccessorSet() = default;
  explicit SuccessorSet(int universe) : universe_(universe) {
    std::size_t words = std::max<std::size_t>(1, (static_cast<std::size_t>(universe) + 63) / 64);
    for (;;) {
      levels_.emplace_back(words, 0);
      if (words == 1) break;
      words = (words + 63) / 64;
    }
  }

  int universe() const noexcept { return universe_; }

  bool contains(int x) const noexcept {
    const auto i = static_cast<std::size_t>(x);
    return (levels_[0][i >> 6] >> (i & 63)) & 1u;
  }

  void insert(int x) noexcept {
    auto i = static_cast<std::size_t>(x);
    for (auto& level : levels_) {
      std::uint64_t& word = level[i >> 6];
      const bool was_empty = word == 0;
      word |= std::uint64_t{1} << (i & 63);
      if (!was_empty) return;
      i >>= 6;
    }
  }

  void erase(int x) noexcept {
    auto i = static_cast<std::size_t>(x);
    for (auto& level : levels_) {
      std::uint64_t& word = level[i >> 6];
      word &= ~(std::uint64_t{1} << (i & 63));
      if (word != 0) return;
      i >>= 6;
    }
  }

  // Smallest member >= x, or kNone.
  int next(int x) const noexcept {
    if (x < 0) x = 0;
    if (x >= universe_) return kNone;
    auto i = static_cast<std::size_t>(x);
    std::size_t depth = 0;
    // Climb until some word holds a member at or after the cursor.
    for (;; ++depth) {
      if (depth == levels_.size() || (i >> 6) >= levels_[depth].size()) return kNone;
      const std::uint64_t word = levels_[depth][i >> 6] & (~std::uint64_t{0} << (i & 63));
      if (word != 0) {
        i = (i & ~std::size_t{63}) | static_cast<std::size_t>(std::countr_zero(word));
        break;
      }
      i = (i >> 6) + 1;
    }
    // Descend along the lowest set bits.
    while (depth > 0) {
      --depth;
      i = (i << 6) | static_cast<std::size_t>(std::countr_zero(levels_[depth][i]));
    }
    return static_cast<int>(i);
  }

  // Largest member <= x, or kNone.
  int prev(int x) const noexcept {
    if (x < 0) return kNone;
    if (x >= universe_) x = universe_ - 1;
    auto i = static_cast<std::size_t>(x);
    std::size_t depth = 0;
    for (;; ++depth) {
      if (depth == levels_.size()) return kNone;
      const std::uint64_t word = levels_[depth][i >> 6] & (~std::uint64_t{0} >> (63 - (i & 63)));
      if (word != 0) {
        i = (i & ~std::size_t{63}) | static_cast<std::size_t>(63 - std::countl_zero(word));
        break;
      }
      if ((i >> 6) == 0) return kNone;
      i = (i >> 6) - 1;
    }
    while (depth > 0) {
      --depth;
      i = (i << 6) | static_cast<std::size_t>(63 - std::countl_zero(levels_[depth][i]));
    }
    return static_cast<int>(i);
  }

 private:
  int universe_ = 0;
  std::vector<std::vector<std::uint64_t>> levels_;  // levels_[0] holds the members
};

}  // namespace lrsearch
