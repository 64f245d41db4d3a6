#pragma once

// Brute-force ground truth by exhaustive enumeration of k-ary words.  Slow on
// purpose; every other engine is checked against these counts.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pogp/numeric.hpp"
#include "pogp/pattern.hpp"

namespace pogp {

/// Enumeration budget, measured in word-steps (letters appended while
/// walking the tree of words).  Exceeding it raises BudgetExceeded; results
/// are never silently truncated.
struct EnumLimits {
  std::uint64_t max_steps = 100'000'000;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t limit)
      : std::runtime_error("enumeration budget of " + std::to_string(limit) +
                           " word-steps exceeded"),
        limit_(limit) {}
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
};

struct CountTable {
  Pogp pattern;
  int alphabet = 0;
  std::vector<BigInt> counts;  // counts[n] for n = 0..N
};

struct MndTable {
  Pogp pattern;
  int alphabet = 0;
  int length = 0;
  std::map<int, BigInt> histogram;  // s -> number of words with that statistic
};

/// |[k]^n(p)|: words of length n over 1..k avoiding p.  DFS with prefix
/// pruning (an occurrence in a prefix never goes away).
BigInt count_avoiders(const Pogp& p, int k, int n, const EnumLimits& limits = {});

/// counts[n] = count_avoiders(p, k, n) for n = 0..N, one shared budget.
CountTable avoider_series(const Pogp& p, int k, int N, const EnumLimits& limits = {});

/// Words with exactly one occurrence of the hyphen-free p, at the far right.
/// Full enumeration, no pruning.
BigInt count_quasi_avoiders(const Pogp& p, int k, int n, const EnumLimits& limits = {});

/// Histogram of the maximum-non-overlapping-occurrence statistic over [k]^n.
/// Full enumeration, no pruning.
MndTable mnd_distribution(const Pogp& p, int k, int n, const EnumLimits& limits = {});

struct EquivReport {
  struct Mismatch {
    int alphabet = 0;
    int length = 0;
    BigInt left;
    BigInt right;
  };
  bool equivalent = false;                // same counts over the whole grid
  std::optional<Mismatch> counterexample; // first mismatch in (k, n) order
  std::vector<bool> per_alphabet;         // verdict for each k = 1..K
};

/// Compares avoider counts of p and q for 1 <= k <= K, 0 <= n <= N.
EquivReport equiv_check(const Pogp& p, const Pogp& q, int K, int N,
                        const EnumLimits& limits = {});

}  // namespace pogp
