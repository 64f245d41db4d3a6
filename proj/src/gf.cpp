#include "pogp/gf.hpp"

#include <algorithm>
#include <stdexcept>

namespace pogp::gf {

namespace {

Series one(int order) { return Series::constant(1, order); }

Series one_minus_x(int order) {
  Series s = one(order);
  if (order >= 1) s.set_coeff(1, -1);
  return s;
}

// (kx - 1)
Series kx_minus_one(int k, int order) {
  Series s = Series::constant(-1, order);
  if (order >= 1) s.set_coeff(1, k);
  return s;
}

Series geometric(int k, int order) {  // 1/(1-kx)
  Series s(order);
  Rational c = 1;
  for (int n = 0; n <= order; ++n, c *= k) s.set_coeff(n, c);
  return s;
}

void check_k(int k) {
  if (k < 0) throw std::invalid_argument("alphabet size must be nonnegative");
}

// Closed forms must produce genuine counting sequences; anything else is an
// internal error, not bad input.
Series checked_counts(Series s, const char* what) {
  if (!s.is_integral() || !s.is_nonnegative() || s.coeff(0) != 1)
    throw std::logic_error(std::string(what) + " produced a non-counting series");
  return s;
}

}  // namespace

Provider unit_provider(int trunc_order) {
  return [trunc_order](int) { return one(trunc_order); };
}

Provider registry_provider(std::string name, int trunc_order) {
  return [name = std::move(name), trunc_order](int k) {
    return registry_series(name, k, trunc_order);
  };
}

Provider oracle_provider(Pogp p, int trunc_order, EnumLimits limits) {
  return [p = std::move(p), trunc_order, limits](int k) {
    CountTable table = avoider_series(p, k, trunc_order, limits);
    Series s(trunc_order);
    for (int n = 0; n <= trunc_order; ++n) s.set_coeff(n, Rational(table.counts[n]));
    return s;
  };
}

const std::vector<std::string>& registry_names() {
  static const std::vector<std::string> names{"12", "21", "122", "212", "123", "1-1'2'"};
  return names;
}

bool registry_has(std::string_view name) {
  const auto& names = registry_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

Series registry_series(std::string_view name, int k, int trunc_order) {
  check_k(k);
  if (!registry_has(name))
    throw std::invalid_argument("no registry entry for pattern \"" + std::string(name) + "\"");
  const int N = trunc_order;
  if (k == 0) return one(N);

  if (name == "12" || name == "21") return checked_counts(one_minus_x(N).pow(k).inverse(), "12/21");

  if (name == "122") {
    // x / ((1-x^2)^k - (1-x)): numerator and denominator share a root at 0;
    // cancel the factor x at one extra order, then invert.
    Series d = Series::monomial(-1, 2, N + 1) + one(N + 1);  // 1 - x^2
    d = d.pow(k) - one_minus_x(N + 1);
    return checked_counts(d.shifted_down().inverse(), "122");
  }

  if (name == "212") {
    Series sum(N);
    for (int j = 0; j < k; ++j) {
      Series denom = Series::monomial(j, 2, N) + one(N);  // 1 + j x^2
      sum = sum + denom.inverse();
    }
    return checked_counts((one(N) - Series::monomial(1, 1, N) * sum).inverse(), "212");
  }

  if (name == "123") {
    // reciprocal of sum_j a_j C(k,j) x^j with a_j of period 3: 1, -1, 0.
    Series denom(N);
    for (int j = 0; j <= k && j <= N; ++j) {
      int a = j % 3 == 0 ? 1 : j % 3 == 1 ? -1 : 0;
      if (a) denom.set_coeff(j, Rational(a * binomial(k, j)));
    }
    return checked_counts(denom.inverse(), "123");
  }

  // "1-1'2'": a(n) = k * C(n+k-2, n-1) for n >= 1.
  Series s(N);
  s.set_coeff(0, 1);
  for (int n = 1; n <= N; ++n) s.set_coeff(n, Rational(k * binomial(n + k - 2, n - 1)));
  return checked_counts(std::move(s), "1-1'2'");
}

Series scattered_peak_series(int k, int trunc_order) {
  check_k(k);
  const int N = trunc_order;
  if (k == 0) return one(N);
  Series a = one_minus_x(N).pow(2 * k - 1).inverse();
  for (int j = 1; j <= k - 1; ++j)
    a = a - Series::monomial(1, 1, N) * one_minus_x(N).pow(2 * j).inverse();
  return checked_counts(std::move(a), "scattered peak closed form");
}

Series scattered_peak_by_recurrence(int k, int trunc_order) {
  check_k(k);
  const int N = trunc_order;
  // a(n; j) for j = 0..k, built upward in the alphabet size.
  std::vector<BigInt> prev(N + 1, 0), cur(N + 1, 0);
  prev[0] = 1;  // j = 0: only the empty word
  for (int j = 1; j <= k; ++j) {
    cur[0] = 1;
    if (N >= 1) cur[1] = j;
    for (int n = 2; n <= N; ++n) cur[n] = 2 * cur[n - 1] - cur[n - 2] + prev[n];
    std::swap(prev, cur);
  }
  Series s(N);
  for (int n = 0; n <= N; ++n) s.set_coeff(n, Rational(prev[n]));
  return checked_counts(std::move(s), "scattered peak recurrence");
}

Series quasi_transform(const Series& avoidance, int k) {
  check_k(k);
  const int N = avoidance.trunc_order();
  return kx_minus_one(k, N) * avoidance + one(N);
}

Series shuffle_same(const Provider& tau, int k, int trunc_order) {
  check_k(k);
  const int N = trunc_order;
  Series a = one(N);
  for (int j = 1; j <= k; ++j) {
    Series t = tau(j - 1);
    Series denom = one(N) - Series::monomial(1, 1, N) * t;
    a = (a - Series::monomial(1, 1, N) * t * t) * denom.inverse().pow(2);
  }
  return a;
}

Series shuffle_general(const Provider& tau, const Provider& nu, int k, int trunc_order) {
  check_k(k);
  const int N = trunc_order;
  Series a = one(N);
  for (int j = 1; j <= k; ++j) {
    Series t = tau(j - 1);
    Series v = nu(j - 1);
    Series x = Series::monomial(1, 1, N);
    Series denom = (one(N) - x * t) * (one(N) - x * v);
    a = (a - x * t * v) * denom.inverse();
  }
  return a;
}

Series multipattern(std::span<const Provider> parts, int k, int trunc_order) {
  check_k(k);
  if (parts.empty()) throw std::invalid_argument("multi-pattern needs at least one block");
  const int N = trunc_order;
  Series total(N);
  Series running = one(N);  // prod over earlier blocks of ((kx-1)A_i + 1)
  for (const Provider& part : parts) {
    Series a = part(k);
    total = total + a * running;
    running = running * quasi_transform(a, k);
  }
  return total;
}

Series prefix_decomposition(const Provider& tau0, const Provider& phi, int k, int trunc_order) {
  check_k(k);
  Series head = tau0(k);
  if (head.trunc_order() != trunc_order)
    throw std::invalid_argument("provider order does not match the requested truncation");
  return head + phi(k) * quasi_transform(head, k);
}

Series descent_multipattern(int k, int s, int trunc_order) {
  check_k(k);
  if (s < 1) throw std::invalid_argument("block count must be positive");
  const int N = trunc_order;
  if (k == 0) return one(N);
  // 1 + (kx-1)/(1-x)^k is the quasi transform of the one-block series; the
  // numerator 1 - (...)^s is then spread over 1/(1-kx) exactly.
  Series q = quasi_transform(one_minus_x(N).pow(k).inverse(), k);
  return checked_counts((one(N) - q.pow(s)) * geometric(k, N), "descent multi-pattern");
}

YSeries mnd_gf(const Series& avoidance, int k, int y_degree) {
  check_k(k);
  if (y_degree < 0) throw std::invalid_argument("y degree must be nonnegative");
  Series step = quasi_transform(avoidance, k);
  std::vector<Series> slices;
  slices.reserve(static_cast<size_t>(y_degree) + 1);
  Series cur = avoidance;
  for (int s = 0; s <= y_degree; ++s) {
    slices.push_back(cur);
    if (s < y_degree) cur = cur * step;
  }
  return YSeries(std::move(slices));
}

YSeries reciprocal_linear_in_y(const Series& p, const Series& q, int y_degree) {
  if (y_degree < 0) throw std::invalid_argument("y degree must be nonnegative");
  Series p_inv = p.inverse();
  std::vector<Series> slices;
  slices.reserve(static_cast<size_t>(y_degree) + 1);
  Series cur = p_inv;
  Series step = q.scaled(-1) * p_inv;
  for (int s = 0; s <= y_degree; ++s) {
    slices.push_back(cur);
    if (s < y_degree) cur = cur * step;
  }
  return YSeries(std::move(slices));
}

namespace {

// A single-class block as plain rank text, e.g. [2''1''] -> "21"; empty when
// the block mixes classes or a rank needs parentheses.
std::optional<std::string> block_text(const std::vector<Symbol>& block) {
  std::string text;
  int cls = block.front().cls;
  for (Symbol s : block) {
    if (s.cls != cls || s.rank > 9) return std::nullopt;
    text += static_cast<char>('0' + s.rank);
  }
  return text;
}

std::optional<Provider> block_provider(const std::vector<Symbol>& block, int trunc_order) {
  auto text = block_text(block);
  if (!text) return std::nullopt;
  if (*text == "1") return unit_provider(trunc_order);
  if (registry_has(*text)) return registry_provider(*text, trunc_order);
  return std::nullopt;
}

}  // namespace

std::optional<Series> formula_series(const Pogp& p, int k, int trunc_order) {
  check_k(k);
  for (const std::string& name : registry_names())
    if (p == Pogp::parse(name)) return registry_series(name, k, trunc_order);

  PatternClass pc = classify(p);
  const auto& blocks = p.blocks();

  if (pc.kind == PatternKind::Shuffle && blocks.size() == 3) {
    auto tau = block_provider(blocks[0], trunc_order);
    auto nu = block_provider(blocks[2], trunc_order);
    if (tau && nu) return shuffle_general(*tau, *nu, k, trunc_order);
  }

  if (pc.kind == PatternKind::Multi) {
    std::vector<Provider> parts;
    for (const auto& block : blocks) {
      auto part = block_provider(block, trunc_order);
      if (!part) return std::nullopt;
      parts.push_back(std::move(*part));
    }
    return multipattern(parts, k, trunc_order);
  }

  return std::nullopt;
}

}  // namespace pogp::gf
