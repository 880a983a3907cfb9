#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "lrsearch/oracle.hpp"

namespace lrsearch::cli {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<int> parse_line(std::string_view line, int line_no) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (is_space(line[i])) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    std::size_t end = i;
    while (end < line.size() && !is_space(line[end]) && line[end] != '#') ++end;
    std::string_view token = line.substr(i, end - i);
    const int column = static_cast<int>(i) + 1;
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    const bool double_sign = token.size() > 1 && token.front() == '+' && token[1] == '-';
    if (digits.empty() || double_sign || ec != std::errc() ||
        ptr != digits.data() + digits.size()) {
      throw ParseError(line_no, column, "expected a signed integer, got '" + std::string(token) + "'");
    }
    out.push_back(value);
    i = end;
  }
  return out;
}

std::vector<Interval> sorted(std::vector<Interval> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Removes element e from every sequence and closes the gap in the labels.
std::vector<RawSequence> drop_element(const std::vector<RawSequence>& raw, int e) {
  std::vector<RawSequence> out;
  for (const RawSequence& seq : raw) {
    RawSequence next;
    for (int v : seq) {
      const int a = v < 0 ? -v : v;
      if (a == e) continue;
      const int relabeled = a > e ? a - 1 : a;
      next.push_back(v < 0 ? -relabeled : relabeled);
    }
    out.push_back(std::move(next));
  }
  return out;
}

bool still_mismatches(const std::vector<RawSequence>& raw, IntervalClass cls) {
  try {
    const ProblemInstance instance = validate(raw, cls);
    if (!instance.normalized()) return false;
    return !compare_with_oracle(instance, cls).empty();
  } catch (const Error&) {
    return false;
  }
}

void write_intervals(std::ostream& err, std::string_view label, const std::vector<Interval>& v) {
  err << label << ":";
  for (const Interval& iv : v) err << " (" << iv.t << ".." << iv.x << ")";
  err << "\n";
}

}  // namespace

std::vector<RawSequence> parse_text(std::string_view text) {
  std::vector<RawSequence> out;
  int line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::vector<int> seq = parse_line(text.substr(start, end - start), line_no);
    if (!seq.empty()) {
      if (!out.empty() && seq.size() != out.front().size()) {
        throw Error(ErrorCode::kLengthMismatch,
                    "line " + std::to_string(line_no) + ": " + std::to_string(seq.size()) +
                        " elements, expected " + std::to_string(out.front().size()));
      }
      out.push_back(std::move(seq));
    }
    start = end + 1;
  }
  if (out.empty()) throw Error(ErrorCode::kEmptyInput, "no permutation in input");
  return out;
}

std::vector<RawSequence> parse_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::kIoError, "cannot read " + path);
  return parse_text(text);
}

std::string format_instance(const std::vector<RawSequence>& raw) {
  std::string out;
  for (const RawSequence& seq : raw) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(seq[i]);
    }
    out += '\n';
  }
  return out;
}

std::string emit_text(const IntervalReport& report, bool stats) {
  std::string out;
  for (const Interval& iv : report.intervals) {
    out += std::to_string(iv.t);
    out += ' ';
    out += std::to_string(iv.x);
    out += '\n';
  }
  if (stats) out += "# N=" + std::to_string(report.count()) + "\n";
  return out;
}

std::string emit_json(const IntervalReport& report) {
  nlohmann::ordered_json j;
  j["class"] = std::string(to_string(report.cls));
  j["n"] = report.n;
  j["k"] = report.k;
  auto intervals = nlohmann::ordered_json::array();
  for (const Interval& iv : report.intervals) intervals.push_back({iv.t, iv.x});
  j["intervals"] = std::move(intervals);
  j["count"] = report.count();
  j["op_counters"] = {
      {"pushes_l", report.search_ops.pushes_l},
      {"pushes_r", report.search_ops.pushes_r},
      {"pops_l", report.search_ops.pops_l},
      {"pops_r", report.search_ops.pops_r},
  };
  return j.dump() + "\n";
}

std::vector<RawSequence> random_instance(std::mt19937_64& rng, int n, int k,
                                         bool conserved_endpoints, Shape shape) {
  std::vector<RawSequence> out;
  RawSequence id(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i + 1;
  out.push_back(id);

  // Conserved mode keeps positions 1 and n fixed at +1 and +n.
  const int lo = conserved_endpoints ? 1 : 0;
  const int hi = conserved_endpoints ? n - 1 : n;
  std::bernoulli_distribution coin(0.5);
  for (int p = 1; p < k; ++p) {
    RawSequence seq = id;
    if (hi - lo >= 1) {
      if (shape == Shape::kShuffled || coin(rng)) {
        std::shuffle(seq.begin() + lo, seq.begin() + hi, rng);
        for (int i = lo; i < hi; ++i) {
          if (coin(rng)) seq[static_cast<std::size_t>(i)] = -seq[static_cast<std::size_t>(i)];
        }
      } else {
        std::uniform_int_distribution<int> pos(lo, hi - 1);
        const int reversals = std::uniform_int_distribution<int>(1, 4)(rng);
        for (int r = 0; r < reversals; ++r) {
          int a = pos(rng);
          int b = pos(rng);
          if (a > b) std::swap(a, b);
          std::reverse(seq.begin() + a, seq.begin() + b + 1);
          for (int i = a; i <= b; ++i) seq[static_cast<std::size_t>(i)] = -seq[static_cast<std::size_t>(i)];
        }
      }
    }
    out.push_back(std::move(seq));
  }
  return out;
}

Mismatch compare_with_oracle(const ProblemInstance& instance, IntervalClass cls) {
  const std::vector<Interval> found = sorted(run(instance, cls).intervals);
  const std::vector<Interval> expected = oracle(instance, cls).intervals;
  Mismatch m;
  std::set_difference(expected.begin(), expected.end(), found.begin(), found.end(),
                      std::back_inserter(m.missing));
  std::set_difference(found.begin(), found.end(), expected.begin(), expected.end(),
                      std::back_inserter(m.extra));
  return m;
}

std::vector<RawSequence> shrink_counterexample(std::vector<RawSequence> raw, IntervalClass cls) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t p = raw.size(); p-- > 1;) {
      std::vector<RawSequence> candidate = raw;
      candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(p));
      if (still_mismatches(candidate, cls)) {
        raw = std::move(candidate);
        progress = true;
      }
    }
    for (int e = static_cast<int>(raw.front().size()); e >= 1 && raw.front().size() > 1; --e) {
      std::vector<RawSequence> candidate = drop_element(raw, e);
      if (still_mismatches(candidate, cls)) {
        raw = std::move(candidate);
        progress = true;
      }
    }
  }
  return raw;
}

int run_search(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<RawSequence> raw;
  try {
    raw = parse_input(config.input_path);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kIoError || e.code() == ErrorCode::kParseError ||
                   e.code() == ErrorCode::kLengthMismatch
               ? kExitUsage
               : kExitValidation;
  }

  ProblemInstance instance;
  try {
    instance = validate(raw, config.cls);
    if (config.renumber && !instance.normalized()) instance = renumber(instance);
    require_ready(instance, config.cls);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::kNotNormalized) {
      err << "hint: pass --renumber to relabel against the first permutation\n";
    }
    return kExitValidation;
  }

  const auto start = std::chrono::steady_clock::now();
  const IntervalReport report = run(instance, config.cls);
  const auto elapsed = std::chrono::steady_clock::now() - start;

  if (config.format == Format::kJson) {
    out << emit_json(report);
  } else {
    out << emit_text(report, config.stats);
  }
  if (config.stats) {
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count();
    const OpCounters& ops = report.search_ops;
    err << "# class=" << to_string(report.cls) << " n=" << report.n << " k=" << report.k
        << " N=" << report.count() << " time_us=" << us << " pushes_l=" << ops.pushes_l
        << " pushes_r=" << ops.pushes_r << " pops_l=" << ops.pops_l << " pops_r=" << ops.pops_r
        << "\n";
  }

  if (config.check_oracle) {
    if (instance.size() > kDefaultBruteForceBound) {
      err << "# oracle check skipped: n = " << instance.size() << " > "
          << kDefaultBruteForceBound << "\n";
      return kExitOk;
    }
    const Mismatch m = compare_with_oracle(instance, config.cls);
    if (!m.empty()) {
      err << "oracle mismatch for class " << to_string(config.cls) << "\n";
      write_intervals(err, "missing", m.missing);
      write_intervals(err, "extra", m.extra);
      const std::vector<RawSequence> small = shrink_counterexample(instance.to_raw(), config.cls);
      err << "# minimal counterexample\n" << format_instance(small);
      return kExitOracleMismatch;
    }
    if (config.stats) err << "# oracle check passed\n";
  }
  return kExitOk;
}

}  // namespace lrsearch::cli
