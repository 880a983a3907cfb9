#include "lrsearch/oracle.hpp"

#include <algorithm>
#include <string>

namespace lrsearch {

namespace {

std::size_t at(int x) noexcept { return static_cast<std::size_t>(x); }

// table[t][x] for 1 <= t < x <= n.
class Table {
 public:
  explicit Table(int n) : n_(n), cells_(at((n + 2) * (n + 2)), 0) {}
  bool get(int t, int x) const {
    if (t < 1 || x > n_ || t >= x) return false;
    return cells_[at(t * (n_ + 2) + x)] != 0;
  }
  void set(int t, int x) { cells_[at(t * (n_ + 2) + x)] = 1; }
  std::vector<Interval> list() const {
    std::vector<Interval> out;
    for (int t = 1; t <= n_; ++t) {
      for (int x = t + 1; x <= n_; ++x) {
        if (get(t, x)) out.push_back({t, x});
      }
    }
    return out;
  }

 private:
  int n_;
  std::vector<unsigned char> cells_;
};

void check(const ProblemInstance& instance, int bound) {
  if (!instance.normalized()) {
    throw Error(ErrorCode::kNotNormalized, "oracle needs the identity as first permutation");
  }
  if (instance.size() > bound) {
    throw Error(ErrorCode::kBruteForceBoundExceeded,
                "n = " + std::to_string(instance.size()) + " exceeds the brute-force bound " +
                    std::to_string(bound));
  }
}

Table common_table(const ProblemInstance& instance) {
  const int n = instance.size();
  Table table(n);
  for (int t = 1; t <= n; ++t) {
    std::vector<int> lo(at(instance.count())), hi(at(instance.count()));
    for (int k = 0; k < instance.count(); ++k) lo[at(k)] = hi[at(k)] = instance.perm(k).position(t);
    for (int x = t + 1; x <= n; ++x) {
      bool contiguous = true;
      for (int k = 0; k < instance.count(); ++k) {
        const int p = instance.perm(k).position(x);
        lo[at(k)] = std::min(lo[at(k)], p);
        hi[at(k)] = std::max(hi[at(k)], p);
        if (hi[at(k)] - lo[at(k)] != x - t) contiguous = false;
      }
      if (contiguous) table.set(t, x);
    }
  }
  return table;
}

Table nested_table(const ProblemInstance& instance) {
  const int n = instance.size();
  const Table common = common_table(instance);
  Table nested(n);
  for (int len = 1; len < n; ++len) {
    for (int t = 1; t + len <= n; ++t) {
      const int x = t + len;
      if (!common.get(t, x)) continue;
      if (len == 1 || nested.get(t + 1, x) || nested.get(t, x - 1)) nested.set(t, x);
    }
  }
  return nested;
}

bool conserved_delimiters(const ProblemInstance& instance, int t, int x) {
  const SignedPermutation& ref = instance.perm(0);
  const int a1 = ref.at(std::min(ref.position(t), ref.position(x)));
  const int b1 = ref.at(std::max(ref.position(t), ref.position(x)));
  for (const SignedPermutation& p : instance.perms()) {
    int lo = p.size() + 1;
    int hi = 0;
    for (int e = t; e <= x; ++e) {
      lo = std::min(lo, p.position(e));
      hi = std::max(hi, p.position(e));
    }
    const int ak = p.at(lo);
    const int bk = p.at(hi);
    const bool same = ak == a1 && p.negative(ak) == ref.negative(a1) && bk == b1 &&
                      p.negative(bk) == ref.negative(b1);
    const bool swapped = ak == b1 && p.negative(ak) != ref.negative(b1) && bk == a1 &&
                         p.negative(bk) != ref.negative(a1);
    if (!same && !swapped) return false;
  }
  return true;
}

Table conserved_table(const ProblemInstance& instance) {
  const Table common = common_table(instance);
  Table conserved(instance.size());
  for (const Interval& iv : common.list()) {
    if (conserved_delimiters(instance, iv.t, iv.x)) conserved.set(iv.t, iv.x);
  }
  return conserved;
}

}  // namespace

std::vector<Interval> oracle_common(const ProblemInstance& instance, int bound) {
  check(instance, bound);
  return common_table(instance).list();
}

std::vector<Interval> oracle_nested(const ProblemInstance& instance, int bound) {
  check(instance, bound);
  return nested_table(instance).list();
}

std::vector<Interval> oracle_maximal_nested(const ProblemInstance& instance, int bound) {
  check(instance, bound);
  const Table nested = nested_table(instance);
  std::vector<Interval> out;
  for (const Interval& iv : nested.list()) {
    if (!nested.get(iv.t - 1, iv.x) && !nested.get(iv.t, iv.x + 1)) out.push_back(iv);
  }
  return out;
}

std::vector<Interval> oracle_conserved(const ProblemInstance& instance, int bound) {
  check(instance, bound);
  return conserved_table(instance).list();
}

std::vector<Interval> oracle_irreducible_conserved(const ProblemInstance& instance, int bound) {
  check(instance, bound);
  const int n = instance.size();
  const Table conserved = conserved_table(instance);
  std::vector<Interval> out;
  for (int t = 1; t <= n; ++t) {
    // reach[c]: t = c0 < c1 < ... < cm = c with every (ci..ci+1) conserved, m >= 1.
    std::vector<unsigned char> reach(at(n + 1), 0);
    for (int c = t + 1; c <= n; ++c) {
      bool reducible = false;
      for (int mid = t + 1; mid < c; ++mid) {
        if (reach[at(mid)] && conserved.get(mid, c)) reducible = true;
      }
      if (conserved.get(t, c) || reducible) reach[at(c)] = 1;
      if (conserved.get(t, c) && !reducible) out.push_back({t, c});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Interval> oracle_irreducible_common(const ProblemInstance& instance, int bound) {
  check(instance, bound);
  const std::vector<Interval> common = common_table(instance).list();
  std::vector<Interval> out;
  for (int w = 1; w < instance.size(); ++w) {
    const Interval* small = nullptr;
    for (const Interval& iv : common) {
      if (iv.t > w || iv.x <= w) continue;
      if (small == nullptr || iv.t > small->t || (iv.t == small->t && iv.x < small->x)) {
        small = &iv;
      }
    }
    if (small != nullptr) out.push_back(*small);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Interval> oracle_same_sign(const ProblemInstance& instance, int bound) {
  check(instance, bound);
  std::vector<Interval> out;
  for (const Interval& iv : common_table(instance).list()) {
    bool uniform = true;
    for (const SignedPermutation& p : instance.perms()) {
      for (int e = iv.t + 1; e <= iv.x; ++e) {
        if (p.negative(e) != p.negative(iv.t)) uniform = false;
      }
    }
    if (uniform) out.push_back(iv);
  }
  return out;
}

OracleReport oracle(const ProblemInstance& instance, IntervalClass cls, int bound) {
  OracleReport report;
  report.cls = cls;
  switch (cls) {
    case IntervalClass::kCommon:
      report.intervals = oracle_common(instance, bound);
      break;
    case IntervalClass::kNested:
      report.intervals = oracle_nested(instance, bound);
      break;
    case IntervalClass::kConserved:
      report.intervals = oracle_conserved(instance, bound);
      break;
    case IntervalClass::kIrreducibleCommon:
      report.intervals = oracle_irreducible_common(instance, bound);
      break;
    case IntervalClass::kSameSignCommon:
      report.intervals = oracle_same_sign(instance, bound);
      break;
    case IntervalClass::kMaximalNested:
      report.intervals = oracle_maximal_nested(instance, bound);
      break;
    case IntervalClass::kIrreducibleConserved:
      report.intervals = oracle_irreducible_conserved(instance, bound);
      break;
  }
  return report;
}

}  // namespace lrsearch
