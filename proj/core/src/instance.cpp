#include "lrsearch/instance.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace lrsearch {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kDuplicateElement: return "DuplicateElement";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kConservedEndpointViolation: return "ConservedEndpointViolation";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kPreconditionNotChecked: return "PreconditionNotChecked";
    case ErrorCode::kQueryOutOfRange: return "QueryOutOfRange";
    case ErrorCode::kNotOnR: return "NotOnR";
    case ErrorCode::kBruteForceBoundExceeded: return "BruteForceBoundExceeded";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

constexpr std::array<std::string_view, 7> kClassNames = {
    "common",           "nested",         "conserved",
    "irreducible-common", "same-sign-common", "maximal-nested",
    "irreducible-conserved",
};

bool has_conserved_endpoints(const SignedPermutation& p) {
  const int n = p.size();
  return p.at(1) == 1 && !p.negative(1) && p.at(n) == n && !p.negative(n);
}

}  // namespace

std::string_view to_string(IntervalClass cls) noexcept {
  return kClassNames[static_cast<std::size_t>(cls)];
}

std::optional<IntervalClass> parse_interval_class(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kClassNames.size(); ++i) {
    if (kClassNames[i] == name) return static_cast<IntervalClass>(i);
  }
  return std::nullopt;
}

SignedPermutation SignedPermutation::from_signed(std::span<const int> raw) {
  if (raw.empty()) throw Error(ErrorCode::kEmptyInput, "empty permutation");
  const int n = static_cast<int>(raw.size());
  SignedPermutation p;
  p.values_.resize(raw.size());
  p.inverse_.assign(raw.size() + 1, 0);
  p.negative_.assign(raw.size() + 1, 0);
  for (int pos = 1; pos <= n; ++pos) {
    const int v = raw[static_cast<std::size_t>(pos - 1)];
    const int e = std::abs(v);
    if (v == 0 || e > n) {
      throw Error(ErrorCode::kOutOfRange, "element " + std::to_string(v) +
                                              " at position " + std::to_string(pos) +
                                              " is outside [1, " + std::to_string(n) + "]");
    }
    if (p.inverse_[static_cast<std::size_t>(e)] != 0) {
      throw Error(ErrorCode::kDuplicateElement,
                  "element " + std::to_string(e) + " occurs more than once");
    }
    p.values_[static_cast<std::size_t>(pos - 1)] = e;
    p.inverse_[static_cast<std::size_t>(e)] = pos;
    p.negative_[static_cast<std::size_t>(e)] = v < 0 ? 1 : 0;
  }
  return p;
}

SignedPermutation SignedPermutation::identity(int n) {
  SignedPermutation p;
  p.values_.resize(static_cast<std::size_t>(n));
  p.inverse_.assign(static_cast<std::size_t>(n) + 1, 0);
  p.negative_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int e = 1; e <= n; ++e) {
    p.values_[static_cast<std::size_t>(e - 1)] = e;
    p.inverse_[static_cast<std::size_t>(e)] = e;
  }
  return p;
}

RawSequence SignedPermutation::to_signed() const {
  RawSequence out;
  out.reserve(values_.size());
  for (int e : values_) out.push_back(negative(e) ? -e : e);
  return out;
}

bool SignedPermutation::is_positive_identity() const noexcept {
  for (int p = 1; p <= size(); ++p) {
    if (at(p) != p || negative(p)) return false;
  }
  return true;
}

std::vector<RawSequence> ProblemInstance::to_raw() const {
  std::vector<RawSequence> out;
  out.reserve(perms_.size());
  for (const auto& p : perms_) out.push_back(p.to_signed());
  return out;
}

ProblemInstance validate(std::span<const RawSequence> raw, IntervalClass cls) {
  if (raw.empty()) throw Error(ErrorCode::kEmptyInput, "no permutations given");
  ProblemInstance inst;
  inst.n_ = static_cast<int>(raw.front().size());
  inst.perms_.reserve(raw.size());
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (raw[k].size() != raw.front().size()) {
      throw Error(ErrorCode::kLengthMismatch,
                  "permutation " + std::to_string(k + 1) + " has " +
                      std::to_string(raw[k].size()) + " elements, expected " +
                      std::to_string(inst.n_));
    }
    inst.perms_.push_back(SignedPermutation::from_signed(raw[k]));
  }
  inst.checked_.signed_permutations = true;

  inst.checked_.conserved_endpoints = true;
  for (const auto& p : inst.perms_) {
    if (!has_conserved_endpoints(p)) {
      inst.checked_.conserved_endpoints = false;
      break;
    }
  }
  if (needs_conserved_endpoints(cls) && !inst.checked_.conserved_endpoints) {
    throw Error(ErrorCode::kConservedEndpointViolation,
                "class " + std::string(to_string(cls)) +
                    " needs every permutation to start with +1 and end with +" +
                    std::to_string(inst.n_));
  }
  inst.normalized_ = inst.perms_.front().is_positive_identity();
  return inst;
}

ProblemInstance renumber(const ProblemInstance& instance) {
  const SignedPermutation& ref = instance.perm(0);
  const int n = instance.size();
  ProblemInstance out;
  out.n_ = n;
  out.checked_ = instance.checked_;
  out.perms_.reserve(instance.perms_.size());
  RawSequence relabeled(static_cast<std::size_t>(n));
  for (const auto& p : instance.perms_) {
    for (int pos = 1; pos <= n; ++pos) {
      const int e = p.at(pos);
      const int renamed = ref.position(e);
      const bool flip = p.negative(e) != ref.negative(e);
      relabeled[static_cast<std::size_t>(pos - 1)] = flip ? -renamed : renamed;
    }
    out.perms_.push_back(SignedPermutation::from_signed(relabeled));
  }
  out.checked_.conserved_endpoints =
      std::all_of(out.perms_.begin(), out.perms_.end(), has_conserved_endpoints);
  out.normalized_ = true;
  return out;
}

void require_ready(const ProblemInstance& instance, IntervalClass cls) {
  if (!instance.preconditions().signed_permutations) {
    throw Error(ErrorCode::kPreconditionNotChecked, "instance was not validated");
  }
  if (!instance.normalized()) {
    throw Error(ErrorCode::kNotNormalized,
                "first permutation is not the positive identity; renumber first");
  }
  if (needs_conserved_endpoints(cls) && !instance.preconditions().conserved_endpoints) {
    throw Error(ErrorCode::kConservedEndpointViolation,
                "instance does not start with +1 and end with +n everywhere");
  }
}

}  // namespace lrsearch
