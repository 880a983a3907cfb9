#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lrsearch/instance.hpp"
#include "lrsearch/search.hpp"

namespace lrsearch::cli {

enum class Format { kText, kJson };

struct RunConfig {
  std::string input_path;
  IntervalClass cls = IntervalClass::kCommon;
  bool renumber = false;
  Format format = Format::kText;
  bool check_oracle = false;
  bool stats = false;
};

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitValidation = 2,
  kExitOracleMismatch = 3,
};

// One permutation per non-blank line, whitespace-separated signed integers,
// '#' to end of line is a comment. LF or CRLF. Throws ParseError with the
// 1-based line and column, Error{kLengthMismatch} when lines differ in length
// and Error{kEmptyInput} when there is no permutation at all.
std::vector<RawSequence> parse_text(std::string_view text);

// parse_text on a file; Error{kIoError} if it cannot be read.
std::vector<RawSequence> parse_input(const std::string& path);

// Inverse of parse_text: one line per permutation, LF-terminated.
std::string format_instance(const std::vector<RawSequence>& raw);

// Text: "t x" per interval, then "# N=<count>" when `stats`.
std::string emit_text(const IntervalReport& report, bool stats);
// {"class", "n", "k", "intervals", "count", "op_counters"} in that order.
std::string emit_json(const IntervalReport& report);

enum class Shape {
  kMixed,     // each permutation is a shuffle or a few signed reversals
  kShuffled,  // uniform shuffles only; output stays small for large n
};

// Random instance with the identity first. Each further permutation is either
// a uniform shuffle with random signs or the identity under a few random
// signed reversals. With `conserved_endpoints`, every permutation starts with
// +1 and ends with +n.
std::vector<RawSequence> random_instance(std::mt19937_64& rng, int n, int k,
                                         bool conserved_endpoints, Shape shape = Shape::kMixed);

struct Mismatch {
  std::vector<Interval> missing;  // in the oracle, not in the search output
  std::vector<Interval> extra;    // in the search output, not in the oracle
  bool empty() const noexcept { return missing.empty() && extra.empty(); }
};

// Search versus oracle on a normalized instance.
Mismatch compare_with_oracle(const ProblemInstance& instance, IntervalClass cls);

// Greedily drops permutations and elements while the mismatch persists.
// Expects a normalized instance that already mismatches.
std::vector<RawSequence> shrink_counterexample(std::vector<RawSequence> raw, IntervalClass cls);

// Entry point behind `lrsearch search`; returns the process exit code.
int run_search(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace lrsearch::cli
