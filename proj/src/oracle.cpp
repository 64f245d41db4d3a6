#include "pogp/oracle.hpp"

#include <stdexcept>

namespace pogp {

namespace {

struct StepCounter {
  std::uint64_t used = 0;
  std::uint64_t cap;
  explicit StepCounter(const EnumLimits& limits) : cap(limits.max_steps) {}
  void tick() {
    if (++used > cap) throw BudgetExceeded(cap);
  }
};

void check_args(int k, int n) {
  if (k < 0) throw std::invalid_argument("alphabet size must be nonnegative");
  if (n < 0) throw std::invalid_argument("word length must be nonnegative");
}

BigInt count_avoiders_impl(const Pogp& p, int k, int n, StepCounter& steps) {
  if (n == 0) return 1;
  if (k == 0) return 0;
  BigInt total = 0;
  std::vector<int> letters;
  letters.reserve(n);
  auto dfs = [&](auto&& self) -> void {
    if (static_cast<int>(letters.size()) == n) {
      ++total;
      return;
    }
    for (int l = 1; l <= k; ++l) {
      steps.tick();
      letters.push_back(l);
      if (!contains(Word(letters, k), p)) self(self);
      letters.pop_back();
    }
  };
  dfs(dfs);
  return total;
}

// Calls fn on every word of [k]^n, budget-checked.
template <typename F>
void for_each_word(int k, int n, StepCounter& steps, F&& fn) {
  std::vector<int> letters;
  letters.reserve(n);
  auto dfs = [&](auto&& self) -> void {
    if (static_cast<int>(letters.size()) == n) {
      fn(Word(letters, k));
      return;
    }
    for (int l = 1; l <= k; ++l) {
      steps.tick();
      letters.push_back(l);
      self(self);
      letters.pop_back();
    }
  };
  if (n == 0)
    fn(Word({}, k));
  else if (k > 0)
    dfs(dfs);
}

}  // namespace

BigInt count_avoiders(const Pogp& p, int k, int n, const EnumLimits& limits) {
  check_args(k, n);
  StepCounter steps(limits);
  return count_avoiders_impl(p, k, n, steps);
}

CountTable avoider_series(const Pogp& p, int k, int N, const EnumLimits& limits) {
  check_args(k, N);
  StepCounter steps(limits);
  CountTable table{p, k, {}};
  for (int n = 0; n <= N; ++n) table.counts.push_back(count_avoiders_impl(p, k, n, steps));
  return table;
}

BigInt count_quasi_avoiders(const Pogp& p, int k, int n, const EnumLimits& limits) {
  check_args(k, n);
  if (!p.hyphen_free())
    throw std::invalid_argument("quasi-avoidance requires a hyphen-free pattern");
  StepCounter steps(limits);
  BigInt total = 0;
  for_each_word(k, n, steps, [&](const Word& w) {
    if (quasi_avoids(w, p)) ++total;
  });
  return total;
}

MndTable mnd_distribution(const Pogp& p, int k, int n, const EnumLimits& limits) {
  check_args(k, n);
  if (!p.hyphen_free())
    throw std::invalid_argument("the non-overlapping-occurrence statistic requires a hyphen-free pattern");
  StepCounter steps(limits);
  MndTable table{p, k, n, {}};
  for_each_word(k, n, steps, [&](const Word& w) { ++table.histogram[mnd(w, p)]; });
  return table;
}

EquivReport equiv_check(const Pogp& p, const Pogp& q, int K, int N, const EnumLimits& limits) {
  if (K < 1) throw std::invalid_argument("alphabet budget must be positive");
  if (N < 0) throw std::invalid_argument("length budget must be nonnegative");
  StepCounter steps(limits);
  EquivReport report;
  report.equivalent = true;
  for (int k = 1; k <= K; ++k) {
    bool agree = true;
    for (int n = 0; n <= N; ++n) {
      BigInt left = count_avoiders_impl(p, k, n, steps);
      BigInt right = count_avoiders_impl(q, k, n, steps);
      if (left != right) {
        agree = false;
        if (!report.counterexample)
          report.counterexample = EquivReport::Mismatch{k, n, left, right};
      }
    }
    report.per_alphabet.push_back(agree);
    if (!agree) report.equivalent = false;
  }
  return report;
}

}  // namespace pogp
