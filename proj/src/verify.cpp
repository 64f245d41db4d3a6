#include "pogp/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "pogp/gf.hpp"
#include "pogp/pattern.hpp"

namespace pogp::verify {

namespace {

struct Checker {
  CheckResult result;
  explicit Checker(std::string name) { result.name = std::move(name); }

  bool ok() const { return result.detail.empty(); }

  template <typename... Parts>
  void fail(const Parts&... parts) {
    if (!ok()) return;  // keep the first failure
    std::ostringstream out;
    (out << ... << parts);
    result.detail = out.str();
  }

  CheckResult finish(const std::string& summary) {
    result.passed = ok();
    if (result.passed) result.detail = summary;
    return std::move(result);
  }
};

struct Context {
  const Options& opts;
  std::function<Series(std::string_view, int, int)> fetch;

  int K() const { return opts.max_alphabet; }
  int N() const { return opts.max_length; }
  // oracle-backed grids stay small even when the formula budget is raised
  int oracle_k() const { return std::min(K(), 3); }
  int oracle_n(int hard_cap) const { return std::min(N(), hard_cap); }

  Series oracle(const Pogp& p, int k, int order) const {
    CountTable table = avoider_series(p, k, order, opts.limits);
    Series s(order);
    for (int n = 0; n <= order; ++n) s.set_coeff(n, Rational(table.counts[n]));
    return s;
  }
};

std::string grid(int K, int N) {
  return "k <= " + std::to_string(K) + ", n <= " + std::to_string(N);
}

void compare_series(Checker& c, const char* label, int k, const Series& formula,
                    const Series& truth) {
  for (int n = 0; n <= std::min(formula.trunc_order(), truth.trunc_order()); ++n)
    if (formula.coeff(n) != truth.coeff(n)) {
      c.fail(label, ": k=", k, " n=", n, " expected ", truth.coeff(n), " got ",
             formula.coeff(n));
      return;
    }
}

// eq1: the scattered-peak identity checked three ways, then against counts.
CheckResult check_eq1(const Context& ctx) {
  Checker c("eq1");
  for (int k = 0; k <= ctx.K() && c.ok(); ++k) {
    Series closed = gf::scattered_peak_series(k, ctx.N());
    compare_series(c, "closed form vs recurrence", k,
                   gf::scattered_peak_by_recurrence(k, ctx.N()), closed);
    compare_series(c, "closed form vs shuffle recurrence", k,
                   gf::shuffle_same(gf::unit_provider(ctx.N()), k, ctx.N()), closed);
  }
  Pogp peak = Pogp::parse("1'-2-1''", OrderMode::Shuffle);
  int no = ctx.oracle_n(8);
  for (int k = 1; k <= ctx.oracle_k() && c.ok(); ++k)
    compare_series(c, "closed form vs oracle", k, gf::scattered_peak_series(k, no),
                   ctx.oracle(peak, k, no));
  return c.finish("three derivations agree (" + grid(ctx.K(), ctx.N()) + "), counts verified (" +
                  grid(ctx.oracle_k(), no) + ")");
}

CheckResult check_registry(const Context& ctx) {
  Checker c("registry");
  int no = ctx.oracle_n(8);
  for (const auto& name : gf::registry_names()) {
    Pogp p = Pogp::parse(name);
    for (int k = 1; k <= ctx.oracle_k() && c.ok(); ++k)
      compare_series(c, name.c_str(), k, ctx.fetch(name, k, no), ctx.oracle(p, k, no));
  }
  return c.finish("all registry closed forms match the oracle (" + grid(ctx.oracle_k(), no) + ")");
}

CheckResult check_quasi(const Context& ctx) {
  Checker c("quasi");
  int no = ctx.oracle_n(8);
  for (const auto& name : gf::registry_names()) {
    Pogp p = Pogp::parse(name);
    if (!p.hyphen_free()) continue;
    for (int k = 1; k <= ctx.oracle_k() && c.ok(); ++k) {
      Series q = gf::quasi_transform(ctx.fetch(name, k, no), k);
      for (int n = 0; n <= no && c.ok(); ++n) {
        BigInt truth = count_quasi_avoiders(p, k, n, ctx.opts.limits);
        if (q.coeff(n) != Rational(truth))
          c.fail(name, ": k=", k, " n=", n, " expected ", truth, " got ", q.coeff(n));
      }
    }
  }
  return c.finish("quasi-avoidance transform matches the oracle (" +
                  grid(ctx.oracle_k(), no) + ")");
}

CheckResult check_multi(const Context& ctx) {
  Checker c("multi");
  int no = ctx.oracle_n(8);
  Pogp rise_twice = Pogp::parse("12-1'2'");
  std::vector<gf::Provider> parts{gf::registry_provider("12", no),
                                  gf::registry_provider("12", no)};
  for (int k = 1; k <= ctx.oracle_k() && c.ok(); ++k) {
    Series truth = ctx.oracle(rise_twice, k, no);
    compare_series(c, "block sum", k, gf::multipattern(parts, k, no), truth);
    compare_series(c, "closed form", k, gf::descent_multipattern(k, 2, no), truth);
    compare_series(c, "prefix split", k, gf::prefix_decomposition(parts[0], parts[1], k, no),
                   truth);
  }
  return c.finish("multi-pattern theorems match the oracle on 12-1'2' (" +
                  grid(ctx.oracle_k(), no) + ")");
}

CheckResult check_shuffle(const Context& ctx) {
  Checker c("shuffle");
  int no = ctx.oracle_n(7);
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
      for (int k = 1; k <= ctx.oracle_k() && c.ok(); ++k)
        compare_series(c, text.c_str(), k, gf::shuffle_general(provider(tau, no), provider(nu, no), k, no),
                       ctx.oracle(p, k, no));
      // symmetry at the full formula budget
      for (int k = 0; k <= ctx.K() && c.ok(); ++k)
        if (gf::shuffle_general(provider(tau, ctx.N()), provider(nu, ctx.N()), k, ctx.N()) !=
            gf::shuffle_general(provider(nu, ctx.N()), provider(tau, ctx.N()), k, ctx.N()))
          c.fail("symmetry broken for ", tau, "-l-", nu, " at k=", k);
    }
  return c.finish("nine shuffles match the oracle (" + grid(ctx.oracle_k(), no) +
                  "), symmetric up to k = " + std::to_string(ctx.K()));
}

CheckResult check_mnd(const Context& ctx) {
  Checker c("mnd");
  int no = ctx.oracle_n(7);
  for (const auto& name : gf::registry_names()) {
    Pogp p = Pogp::parse(name);
    if (!p.hyphen_free()) continue;
    for (int k = 1; k <= ctx.oracle_k() && c.ok(); ++k) {
      YSeries f = gf::mnd_gf(ctx.fetch(name, k, no), k, no / p.length());
      for (int n = 0; n <= no && c.ok(); ++n) {
        MndTable table = mnd_distribution(p, k, n, ctx.opts.limits);
        for (int s = 0; s <= f.y_degree() && c.ok(); ++s) {
          BigInt truth = table.histogram.count(s) ? table.histogram.at(s) : 0;
          if (f.coeff(n, s) != Rational(truth))
            c.fail(name, ": k=", k, " n=", n, " s=", s, " expected ", truth, " got ",
                   f.coeff(n, s));
        }
      }
    }
  }
  // y = 1 collapse, formula only
  for (const auto& name : {"12", "122"}) {
    Pogp p = Pogp::parse(name);
    for (int k = 1; k <= ctx.K() && c.ok(); ++k) {
      int depth = ctx.N() / p.length();
      Series total = gf::mnd_gf(ctx.fetch(name, k, ctx.N()), k, depth).at_y_one();
      Rational expect = 1;
      int safe = std::min(ctx.N(), (depth + 1) * p.length() - 1);
      for (int n = 0; n <= safe; ++n, expect *= k)
        if (total.coeff(n) != expect) {
          c.fail(name, ": y=1 collapse broken at k=", k, " n=", n);
          break;
        }
    }
  }
  // the displayed rational form for rises, at order 10
  for (int k = 1; k <= ctx.oracle_k() && c.ok(); ++k) {
    const int order = 10, depth = 4;
    Series one = Series::constant(1, order);
    Series p = (one - Series::monomial(1, 1, order)).pow(k);
    Series q = one - Series::monomial(k, 1, order) - p;
    if (gf::reciprocal_linear_in_y(p, q, depth) !=
        gf::mnd_gf(ctx.fetch("12", k, order), k, depth))
      c.fail("rises: displayed rational form differs from the slice construction at k=", k);
  }
  return c.finish("distribution slices match the oracle (" + grid(ctx.oracle_k(), no) +
                  "), y=1 collapse and the rational form verified");
}

CheckResult check_expand(const Context&) {
  Checker c("expand");
  std::mt19937 rng(12345);
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
    std::uniform_int_distribution<int> nblocks(1, std::min<int>(3, static_cast<int>(letters.size())));
    int b = nblocks(rng);
    std::vector<std::vector<Symbol>> blocks(b);
    for (size_t i = 0; i < letters.size(); ++i)
      blocks[i % b].push_back(letters[i]);
    return Pogp(std::move(blocks), {});
  };
  const std::pair<int, int> sizes[] = {{1, 1}, {2, 1}, {2, 2}, {3, 2}};
  for (auto [r1, r2] : sizes)
    for (int trial = 0; trial < 5 && c.ok(); ++trial) {
      Pogp p = random_two_class(r1, r2);
      size_t got = expand(p).size();
      BigInt want = expansion_count(r1, r2);
      if (want != BigInt(got))
        c.fail("pattern ", p.to_string(), " (sizes ", r1, ",", r2, "): |expansion| = ", got,
               ", count formula = ", want);
    }
  // expansion soundness on the worked shuffle patterns
  for (const char* text : {"1'-2-1''", "1'2'-3-1''"}) {
    Pogp p = Pogp::parse(text, OrderMode::Shuffle);
    auto parts = expand(p);
    for (int n = 0; n <= 5 && c.ok(); ++n) {
      std::vector<int> letters(n, 1);
      while (true) {
        Word w(letters, 2);
        bool direct = avoids(w, p);
        bool via = std::all_of(parts.begin(), parts.end(),
                               [&](const Pogp& q) { return avoids(w, q); });
        if (direct != via) {
          c.fail(text, ": word ", w.to_string(), " disagrees with its expansion");
          break;
        }
        int i = n - 1;
        while (i >= 0 && letters[i] == 2) letters[i--] = 1;
        if (i < 0) break;
        ++letters[i];
      }
    }
  }
  return c.finish("expansion sizes match the count formula; avoidance matches the expansion");
}

CheckResult check_equiv(const Context& ctx) {
  Checker c("equiv");
  int K = ctx.oracle_k(), N = ctx.oracle_n(6);
  auto expect_equiv = [&](const char* left, const char* right, OrderMode mode) {
    if (!c.ok()) return;
    EquivReport r = equiv_check(Pogp::parse(left, mode), Pogp::parse(right, mode), K, N,
                                ctx.opts.limits);
    if (!r.equivalent) {
      const auto& m = *r.counterexample;
      c.fail(left, " vs ", right, ": k=", m.alphabet, " n=", m.length, ": ", m.left, " != ",
             m.right);
    }
  };
  // swapping the two blocks of a multi-pattern
  expect_equiv("12-1'2'", "1'2'-12", OrderMode::Incomparable);
  // replacing blocks by their reversals / complements
  expect_equiv("12-1'2'", "21-1'2'", OrderMode::Incomparable);
  expect_equiv("12-1'2'", "12-2'1'", OrderMode::Incomparable);
  expect_equiv("122-1'2'", "221-1'2'", OrderMode::Incomparable);
  expect_equiv("122-1'2'", "211-1'2'", OrderMode::Incomparable);
  // permuting the blocks of a three-block multi-pattern
  expect_equiv("12-2'1'-1''1''", "21-1'2'-1''1''", OrderMode::Incomparable);
  expect_equiv("12-2'1'-1''1''", "11-2'1'-1''2''", OrderMode::Incomparable);
  // shuffle symmetry
  expect_equiv("1'2'-3-2''1''", "2'1'-3-1''2''", OrderMode::Shuffle);
  return c.finish("asserted equivalences hold (" + grid(K, N) + ")");
}

}  // namespace

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"eq1",     "registry", "quasi",  "multi",
                                              "shuffle", "mnd",      "expand", "equiv"};
  return names;
}

Report run(const Options& opts) {
  if (opts.max_alphabet < 0 || opts.max_length < 0)
    throw std::invalid_argument("verification budgets must be nonnegative");
  for (const auto& name : opts.only)
    if (std::find(check_names().begin(), check_names().end(), name) == check_names().end())
      throw std::invalid_argument("unknown check \"" + name + "\"");

  Context ctx{opts, {}};
  ctx.fetch = opts.registry_override
                  ? opts.registry_override
                  : [](std::string_view name, int k, int order) {
                      return gf::registry_series(name, k, order);
                    };

  using CheckFn = CheckResult (*)(const Context&);
  const std::pair<const char*, CheckFn> table[] = {
      {"eq1", check_eq1},     {"registry", check_registry}, {"quasi", check_quasi},
      {"multi", check_multi}, {"shuffle", check_shuffle},   {"mnd", check_mnd},
      {"expand", check_expand}, {"equiv", check_equiv},
  };
  Report report;
  for (const auto& [name, fn] : table) {
    if (!opts.only.empty() &&
        std::find(opts.only.begin(), opts.only.end(), name) == opts.only.end())
      continue;
    report.checks.push_back(fn(ctx));
  }
  return report;
}

}  // namespace pogp::verify
