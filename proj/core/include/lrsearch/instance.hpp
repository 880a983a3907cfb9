#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lrsearch/error.hpp"

namespace lrsearch {

// A value-space interval (t..x) = {t, t+1, ..., x} with 1 <= t < x <= n.
struct Interval {
  int t = 0;
  int x = 0;

  friend auto operator<=>(const Interval&, const Interval&) = default;
};

enum class IntervalClass {
  kCommon,
  kNested,
  kConserved,
  kIrreducibleCommon,
  kSameSignCommon,
  kMaximalNested,
  kIrreducibleConserved,
};

inline constexpr std::array<IntervalClass, 7> kAllIntervalClasses = {
    IntervalClass::kCommon,           IntervalClass::kNested,
    IntervalClass::kConserved,        IntervalClass::kIrreducibleCommon,
    IntervalClass::kSameSignCommon,   IntervalClass::kMaximalNested,
    IntervalClass::kIrreducibleConserved,
};

// Kebab-case names used on the command line and in JSON reports.
std::string_view to_string(IntervalClass cls) noexcept;
std::optional<IntervalClass> parse_interval_class(std::string_view name) noexcept;

// Conserved and IrreducibleConserved need every permutation to start with +1
// and end with +n.
constexpr bool needs_conserved_endpoints(IntervalClass cls) noexcept {
  return cls == IntervalClass::kConserved ||
         cls == IntervalClass::kIrreducibleConserved;
}

// One permutation as written in an input file: element e > 0 is +e, -e is
// the negative occurrence of e.
using RawSequence = std::vector<int>;

// A permutation of [n] with a sign per element and a position lookup.
// Positions and elements are 1-based.
class SignedPermutation {
 public:
  SignedPermutation() = default;

  // Throws Error{kEmptyInput, kOutOfRange, kDuplicateElement}.
  static SignedPermutation from_signed(std::span<const int> raw);

  static SignedPermutation identity(int n);

  int size() const noexcept { return static_cast<int>(values_.size()); }

  // Element at 1-based position p.
  int at(int p) const noexcept { return values_[static_cast<std::size_t>(p - 1)]; }
  // 1-based position of element e.
  int position(int e) const noexcept { return inverse_[static_cast<std::size_t>(e)]; }
  bool negative(int e) const noexcept { return negative_[static_cast<std::size_t>(e)] != 0; }

  std::span<const int> values() const noexcept { return values_; }

  // Signed form suitable for writing back out.
  RawSequence to_signed() const;

  bool is_positive_identity() const noexcept;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> values_;                 // values_[p - 1]
  std::vector<int> inverse_;                // inverse_[e], slot 0 unused
  std::vector<unsigned char> negative_;     // negative_[e], slot 0 unused
};

struct ClassPreconditions {
  bool signed_permutations = false;
  bool conserved_endpoints = false;
};

// K signed permutations over the same [n]. Immutable once built.
class ProblemInstance {
 public:
  int size() const noexcept { return n_; }
  int count() const noexcept { return static_cast<int>(perms_.size()); }

  // k is 0-based here; perms()[0] is the reference permutation.
  const SignedPermutation& perm(int k) const noexcept {
    return perms_[static_cast<std::size_t>(k)];
  }
  std::span<const SignedPermutation> perms() const noexcept { return perms_; }

  // True when the first permutation is the all-positive identity.
  bool normalized() const noexcept { return normalized_; }
  const ClassPreconditions& preconditions() const noexcept { return checked_; }

  std::vector<RawSequence> to_raw() const;

  friend bool operator==(const ProblemInstance& a, const ProblemInstance& b) {
    return a.n_ == b.n_ && a.perms_ == b.perms_;
  }

 private:
  friend ProblemInstance validate(std::span<const RawSequence>, IntervalClass);
  friend ProblemInstance renumber(const ProblemInstance&);

  int n_ = 0;
  std::vector<SignedPermutation> perms_;
  bool normalized_ = false;
  ClassPreconditions checked_;
};

// Checks that every sequence is a signed permutation of a common [n] and that
// the class-specific preconditions hold. Errors: kEmptyInput,
// kDuplicateElement, kOutOfRange, kLengthMismatch, kConservedEndpointViolation.
ProblemInstance validate(std::span<const RawSequence> raw, IntervalClass cls);

// Relabels element e as its position in the first permutation, multiplying
// every sign of e by the sign e carries there. The result has the all-positive
// identity first; class memberships carry over through the relabeling.
ProblemInstance renumber(const ProblemInstance& instance);

// Every search entry point requires a normalized instance validated for the
// requested class; throws kNotNormalized or kPreconditionNotChecked otherwise.
void require_ready(const ProblemInstance& instance, IntervalClass cls);

}  // namespace lrsearch
