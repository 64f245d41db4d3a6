// End-to-end acceptance suite.  Each check re-derives a published value or
// cross-checks a closed form against brute-force enumeration, under a wall
// clock limit.  One line per check; exit status is the number of failures.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pogp/gf.hpp"
#include "pogp/oracle.hpp"
#include "pogp/pattern.hpp"

using namespace pogp;

namespace {

struct Gate {
  std::string detail;

  bool ok() const { return detail.empty(); }

  template <typename... Parts>
  void fail(const Parts&... parts) {
    if (!ok()) return;
    std::ostringstream out;
    (out << ... << parts);
    detail = out.str();
  }
};

Series oracle_series(const Pogp& p, int k, int order) {
  CountTable table = avoider_series(p, k, order);
  Series s(order);
  for (int n = 0; n <= order; ++n) s.set_coeff(n, Rational(table.counts[n]));
  return s;
}

void expect_series(Gate& g, const char* label, int k, const Series& got, const Series& want) {
  for (int n = 0; n <= std::min(got.trunc_order(), want.trunc_order()); ++n)
    if (got.coeff(n) != want.coeff(n)) {
      g.fail(label, ": k=", k, " n=", n, " expected ", want.coeff(n), " got ", got.coeff(n));
      return;
    }
}

// 1. The worked examples: occurrence counts, quasi-avoidance verdicts, the
//    non-overlapping statistic, and both expansion sets, all by hand-checkable
//    values.
Gate worked_examples() {
  Gate g;
  auto occ = [&](const char* word, int k, const char* pattern, OrderMode mode, size_t want) {
    size_t got = occurrences(Word::parse(word, k), Pogp::parse(pattern, mode)).size();
    if (got != want)
      g.fail("occurrences(", word, ", ", pattern, ") = ", got, ", expected ", want);
  };
  occ("113425", 5, "1-1'2'", OrderMode::Incomparable, 7);
  occ("31421", 4, "1'-2-1''", OrderMode::Shuffle, 5);

  Pogp q = Pogp::parse("1123");
  auto quasi = [&](const char* word, bool want) {
    if (quasi_avoids(Word::parse(word, 5), q) != want)
      g.fail("quasi_avoids(", word, ", 1123) should be ", want ? "true" : "false");
  };
  quasi("5112234", true);
  quasi("5223411", false);
  quasi("1123345", false);

  Pogp descent = Pogp::parse("21");
  if (mnd(Word::parse("33211", 3), descent) != 1) g.fail("mnd(33211, 21) != 1");
  if (mnd(Word::parse("13211143211", 4), descent) != 3) g.fail("mnd(13211143211, 21) != 3");

  auto expansion = [&](const char* pattern, const std::set<std::string>& want) {
    std::set<std::string> got;
    for (const auto& part : expand(Pogp::parse(pattern, OrderMode::Shuffle)))
      got.insert(part.to_string());
    if (got != want) g.fail("expand(", pattern, ") produced ", got.size(), " patterns");
  };
  expansion("1'-2-1''", {"1-2-1", "1-3-2", "2-3-1"});
  expansion("1'2'-3-1''", {"12-3-1", "12-3-2", "12-4-3", "13-4-2", "23-4-1"});
  return g;
}

// 2. The scattered-peak series: closed form, coefficient recurrence, and the
//    same-block shuffle recurrence agree for k <= 5 at order 12, and match
//    brute-force counts for k <= 3, n <= 8.
Gate series_identity() {
  Gate g;
  for (int k = 1; k <= 5 && g.ok(); ++k) {
    Series closed = gf::scattered_peak_series(k, 12);
    expect_series(g, "recurrence", k, gf::scattered_peak_by_recurrence(k, 12), closed);
    expect_series(g, "shuffle recurrence", k, gf::shuffle_same(gf::unit_provider(12), k, 12),
                  closed);
  }
  Pogp peak = Pogp::parse("1'-2-1''", OrderMode::Shuffle);
  for (int k = 1; k <= 3 && g.ok(); ++k)
    expect_series(g, "oracle", k, gf::scattered_peak_series(k, 8), oracle_series(peak, k, 8));
  return g;
}

// 3. Every registry closed form equals brute-force avoider counts for
//    k <= 3, n <= 8, and the closed count k*C(n+k-2, n-1) is reproduced.
Gate registry_vs_oracle() {
  Gate g;
  for (const auto& name : gf::registry_names()) {
    Pogp p = Pogp::parse(name);
    for (int k = 1; k <= 3 && g.ok(); ++k)
      expect_series(g, name.c_str(), k, gf::registry_series(name, k, 8),
                    oracle_series(p, k, 8));
  }
  for (int k = 1; k <= 3 && g.ok(); ++k) {
    Series s = gf::registry_series("1-1'2'", k, 8);
    for (int n = 1; n <= 8; ++n) {
      Rational want(k * binomial(n + k - 2, n - 1));
      if (s.coeff(n) != want) {
        g.fail("closed count: k=", k, " n=", n, " expected ", want, " got ", s.coeff(n));
        break;
      }
    }
  }
  return g;
}

// 4. The quasi-avoidance transform equals brute-force quasi-avoider counts on
//    the registry grid, coefficientwise a*(n) = k a(n-1) - a(n).
Gate quasi_transform() {
  Gate g;
  for (const auto& name : gf::registry_names()) {
    Pogp p = Pogp::parse(name);
    if (!p.hyphen_free()) continue;
    for (int k = 1; k <= 3 && g.ok(); ++k) {
      Series a = gf::registry_series(name, k, 8);
      Series q = gf::quasi_transform(a, k);
      for (int n = 0; n <= 8 && g.ok(); ++n) {
        Rational truth(count_quasi_avoiders(p, k, n));
        if (q.coeff(n) != truth)
          g.fail(name, ": k=", k, " n=", n, " expected ", truth, " got ", q.coeff(n));
        if (n >= 1 && q.coeff(n) != k * a.coeff(n - 1) - a.coeff(n))
          g.fail(name, ": coefficient identity broken at k=", k, " n=", n);
      }
    }
  }
  return g;
}

// 5. Both multi-pattern routes and the prefix decomposition equal brute-force
//    counts of 12-1'2' for k <= 3, n <= 8.
Gate multi_pattern() {
  Gate g;
  Pogp rise_twice = Pogp::parse("12-1'2'");
  std::vector<gf::Provider> parts{gf::registry_provider("12", 8),
                                  gf::registry_provider("12", 8)};
  for (int k = 1; k <= 3 && g.ok(); ++k) {
    Series truth = oracle_series(rise_twice, k, 8);
    expect_series(g, "block sum", k, gf::multipattern(parts, k, 8), truth);
    expect_series(g, "closed form", k, gf::descent_multipattern(k, 2, 8), truth);
    expect_series(g, "prefix split", k, gf::prefix_decomposition(parts[0], parts[1], k, 8),
                  truth);
  }
  return g;
}

// 6. The shuffle construction equals brute-force counts for all nine block
//    pairs over {1, 12, 21}, and is symmetric in its two arguments.
Gate shuffle_theorems() {
  Gate g;
  const std::vector<std::string> names{"1", "12", "21"};
  auto provider = [](const std::string& name, int order) {
    return name == "1" ? gf::unit_provider(order) : gf::registry_provider(name, order);
  };
  auto primed = [](const std::string& name, int primes) {
    std::string out;
    for (char r : name) {
      out += r;
      out.append(static_cast<size_t>(primes), '\'');
    }
    return out;
  };
  for (const auto& tau : names)
    for (const auto& nu : names) {
      int top = 1 + std::max<int>(*std::max_element(tau.begin(), tau.end()) - '0',
                                  *std::max_element(nu.begin(), nu.end()) - '0');
      std::string text = primed(tau, 1) + "-" + std::to_string(top) + "-" + primed(nu, 2);
      Pogp p = Pogp::parse(text, OrderMode::Shuffle);
      for (int k = 1; k <= 3 && g.ok(); ++k)
        expect_series(g, text.c_str(), k,
                      gf::shuffle_general(provider(tau, 7), provider(nu, 7), k, 7),
                      oracle_series(p, k, 7));
      for (int k = 0; k <= 5 && g.ok(); ++k)
        if (gf::shuffle_general(provider(tau, 12), provider(nu, 12), k, 12) !=
            gf::shuffle_general(provider(nu, 12), provider(tau, 12), k, 12))
          g.fail("symmetry broken for ", tau, " against ", nu, " at k=", k);
    }
  return g;
}

// 7. The occurrence-statistic series matches brute-force histograms for all
//    five hyphen-free registry patterns, collapses to k^n at y=1, and the
//    displayed rational form for rises is reproduced at order 10.
Gate occurrence_distribution() {
  Gate g;
  for (const char* name : {"12", "21", "122", "212", "123"}) {
    Pogp p = Pogp::parse(name);
    for (int k = 1; k <= 3 && g.ok(); ++k) {
      Series a = gf::registry_series(name, k, 7);
      YSeries f = gf::mnd_gf(a, k, 7 / p.length());
      for (int n = 0; n <= 7 && g.ok(); ++n) {
        MndTable table = mnd_distribution(p, k, n);
        for (int s = 0; s <= f.y_degree() && g.ok(); ++s) {
          Rational truth(table.histogram.count(s) ? table.histogram.at(s) : BigInt(0));
          if (f.coeff(n, s) != truth)
            g.fail(name, ": k=", k, " n=", n, " s=", s, " expected ", truth, " got ",
                   f.coeff(n, s));
        }
      }
      Series total = f.at_y_one();
      Rational expect = 1;
      for (int n = 0; n <= 7 && g.ok(); ++n, expect *= k)
        if (total.coeff(n) != expect)
          g.fail(name, ": y=1 collapse broken at k=", k, " n=", n);
    }
  }
  for (int k = 1; k <= 3 && g.ok(); ++k) {
    Series one = Series::constant(1, 10);
    Series p = (one - Series::monomial(1, 1, 10)).pow(k);
    Series q = one - Series::monomial(k, 1, 10) - p;
    if (gf::reciprocal_linear_in_y(p, q, 4) != gf::mnd_gf(gf::registry_series("12", k, 10), k, 4))
      g.fail("rational form for rises differs from the slice construction at k=", k);
  }
  return g;
}

// 8. Expansion sizes: |expand(p)| depends only on the two class sizes and
//    equals the subset-pair count sum_i C(r1,i) C(r1+r2-i, r1).
Gate expansion_count_law() {
  Gate g;
  std::mt19937 rng(2025);
  auto random_two_class = [&](int r1, int r2) {
    std::vector<Symbol> symbols;
    for (int r = 1; r <= r1; ++r) symbols.push_back({1, r});
    for (int r = 1; r <= r2; ++r) symbols.push_back({2, r});
    std::vector<Symbol> letters = symbols;
    std::uniform_int_distribution<size_t> pick(0, symbols.size() - 1);
    std::uniform_int_distribution<int> extra(0, 2);
    int repeats = extra(rng);
    for (int i = 0; i < repeats; ++i) letters.push_back(symbols[pick(rng)]);
    std::shuffle(letters.begin(), letters.end(), rng);
    std::uniform_int_distribution<int> nblocks(1,
                                               std::min<int>(3, static_cast<int>(letters.size())));
    int b = nblocks(rng);
    std::vector<std::vector<Symbol>> blocks(b);
    for (size_t i = 0; i < letters.size(); ++i) blocks[i % b].push_back(letters[i]);
    return Pogp(std::move(blocks), {});
  };
  const std::pair<int, int> sizes[] = {{1, 1}, {2, 1}, {2, 2}, {3, 2}};
  for (auto [r1, r2] : sizes)
    for (int trial = 0; trial < 25 && g.ok(); ++trial) {
      Pogp p = random_two_class(r1, r2);
      size_t got = expand(p).size();
      BigInt want = expansion_count(r1, r2);
      if (want != BigInt(got))
        g.fail("pattern ", p.to_string(), " (sizes ", r1, ",", r2, "): |expansion| = ", got,
               ", formula = ", want);
    }
  return g;
}

// 9. Asserted equivalences hold within the budget K=3, N=6: block swap,
//    reversal and complement substitution, block permutation, and shuffle
//    symmetry.
Gate equivalences() {
  Gate g;
  auto expect_equiv = [&](const char* left, const char* right, OrderMode mode) {
    if (!g.ok()) return;
    EquivReport r = equiv_check(Pogp::parse(left, mode), Pogp::parse(right, mode), 3, 6);
    if (!r.equivalent) {
      const auto& m = *r.counterexample;
      g.fail(left, " vs ", right, ": k=", m.alphabet, " n=", m.length, ": ", m.left,
             " != ", m.right);
    }
  };
  expect_equiv("12-1'2'", "1'2'-12", OrderMode::Incomparable);
  expect_equiv("12-1'2'", "21-1'2'", OrderMode::Incomparable);
  expect_equiv("12-1'2'", "12-2'1'", OrderMode::Incomparable);
  expect_equiv("122-1'2'", "221-1'2'", OrderMode::Incomparable);
  expect_equiv("122-1'2'", "211-1'2'", OrderMode::Incomparable);
  expect_equiv("12-2'1'-1''1''", "21-1'2'-1''1''", OrderMode::Incomparable);
  expect_equiv("12-2'1'-1''1''", "11-2'1'-1''2''", OrderMode::Incomparable);
  expect_equiv("1'2'-3-2''1''", "2'1'-3-1''2''", OrderMode::Shuffle);
  return g;
}

// 10. Structural invariants, property-tested on 1000 random instances with
//     k <= 4, n <= 8: containment is preserved by reversal and complement,
//     avoidance agrees with the expansion, avoider counts grow with the
//     alphabet, are bounded by k times the previous length, and degenerate to
//     k^n when the alphabet is shorter than the longest chain.
Gate invariant_suite() {
  Gate g;
  std::mt19937 rng(424242);
  auto random_pattern = [&]() {
    std::uniform_int_distribution<int> classes(1, 2), size(1, 2), extra(0, 1);
    int nclasses = classes(rng);
    std::vector<Symbol> letters;
    for (int c = 1; c <= nclasses; ++c) {
      int r_max = size(rng);
      for (int r = 1; r <= r_max; ++r) letters.push_back({c, r});
    }
    std::uniform_int_distribution<size_t> pick(0, letters.size() - 1);
    if (extra(rng)) letters.push_back(letters[pick(rng)]);
    std::shuffle(letters.begin(), letters.end(), rng);
    std::uniform_int_distribution<int> nblocks(1,
                                               static_cast<int>(std::min<size_t>(3, letters.size())));
    int b = nblocks(rng);
    std::vector<std::vector<Symbol>> blocks(b);
    for (size_t i = 0; i < letters.size(); ++i) blocks[i % b].push_back(letters[i]);
    return Pogp(std::move(blocks), {});
  };
  std::uniform_int_distribution<int> alphabet(1, 4), length(0, 8);

  for (int trial = 0; trial < 1000 && g.ok(); ++trial) {
    Pogp p = random_pattern();
    int k = alphabet(rng), n = length(rng);
    std::uniform_int_distribution<int> letter(1, k);
    std::vector<int> letters(static_cast<size_t>(n));
    for (auto& l : letters) l = letter(rng);
    Word w(letters, k);

    bool direct = contains(w, p);
    if (contains(reverse(w), reverse(p)) != direct)
      g.fail("reversal broke containment for ", p.to_string(), " in ", w.to_string());
    if (contains(complement(w), complement(p)) != direct)
      g.fail("complement broke containment for ", p.to_string(), " in ", w.to_string());

    auto parts = expand(p);
    bool via = std::all_of(parts.begin(), parts.end(),
                           [&](const Pogp& q) { return avoids(w, q); });
    if (via != !direct)
      g.fail("expansion disagrees with avoidance for ", p.to_string(), " in ", w.to_string());

    if (trial % 10 != 0) continue;
    BigInt count = count_avoiders(p, k, n);
    if (k < 4 && count > count_avoiders(p, k + 1, n))
      g.fail("avoider count dropped from k=", k, " to ", k + 1, " for ", p.to_string());
    if (n >= 1 && count > k * count_avoiders(p, k, n - 1))
      g.fail("prefix bound violated at k=", k, " n=", n, " for ", p.to_string());
    if (k < chain_height(p) && count != boost::multiprecision::pow(BigInt(k), n))
      g.fail("short alphabet should avoid trivially: k=", k, " against ", p.to_string());
  }
  return g;
}

struct Criterion {
  const char* name;
  double limit_seconds;
  Gate (*check)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"worked examples", 1, worked_examples},
      {"series identity", 10, series_identity},
      {"registry vs oracle", 60, registry_vs_oracle},
      {"quasi transform", 60, quasi_transform},
      {"multi-pattern", 60, multi_pattern},
      {"shuffle theorems", 120, shuffle_theorems},
      {"occurrence distribution", 120, occurrence_distribution},
      {"expansion count", 10, expansion_count_law},
      {"equivalences", 120, equivalences},
      {"invariant suite", 120, invariant_suite},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Gate g = c.check();
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = g.ok() && elapsed < c.limit_seconds;
    if (!pass) ++failures;
    std::printf("[%s] %-24s %8.3f s (limit %g s)%s%s\n", pass ? "PASS" : "FAIL", c.name, elapsed,
                c.limit_seconds, g.ok() ? "" : ": ", g.detail.c_str());
  }
  if (failures) std::printf("%d of 10 checks failed\n", failures);
  else std::printf("all 10 checks passed\n");
  return failures;
}
