#pragma once

// Formula engine: closed forms for the registry patterns, the alphabet-size
// recurrences for shuffle and multi-patterns, the quasi-avoidance transform,
// and the bivariate non-overlapping-occurrence distribution.  Everything is
// evaluated as an exact truncated series and is cross-checked against the
// brute-force oracle by the verify suite.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pogp/oracle.hpp"
#include "pogp/pattern.hpp"
#include "pogp/series.hpp"

namespace pogp::gf {

inline constexpr int kDefaultOrder = 16;
inline constexpr int kDefaultYDegree = 8;

/// Avoidance-series supplier: alphabet size -> series at one fixed truncation
/// order.  Every provider maps 0 to the constant series 1 (the empty word is
/// the only word over the empty alphabet).
using Provider = std::function<Series(int)>;

/// Avoidance series of the one-letter pattern "1": constant 1 for every k.
Provider unit_provider(int trunc_order);
/// k -> registry_series(name, k, trunc_order).
Provider registry_provider(std::string name, int trunc_order);
/// k -> brute-force avoider series of p; used as the fallback engine.
Provider oracle_provider(Pogp p, int trunc_order, EnumLimits limits = {});

/// Hyphen-free registry entries plus "1-1'2'"; names are pattern texts.
const std::vector<std::string>& registry_names();
bool registry_has(std::string_view name);
/// Closed-form avoidance series for a registry pattern; k = 0 gives 1.
Series registry_series(std::string_view name, int k, int trunc_order);

/// Closed form for the avoidance of a scattered peak (pattern 1'-2-1''):
/// 1/(1-x)^(2k-1) - sum_{j=1}^{k-1} x/(1-x)^(2j).
Series scattered_peak_series(int k, int trunc_order);
/// Same numbers from the second-order coefficient recurrence
/// a(n;k) = 2a(n-1;k) - a(n-2;k) + a(n;k-1), a(0;k)=1, a(1;k)=k.
Series scattered_peak_by_recurrence(int k, int trunc_order);

/// Quasi-avoidance series (kx-1)*A + 1 of the pattern whose avoidance
/// series is A.
Series quasi_transform(const Series& avoidance, int k);

/// Avoidance of the shuffle tau-l-tau (l dominating), by iterating
/// A(k) = (A(k-1) - x*T^2) / (1 - x*T)^2 with T = tau(k-1) from A(0) = 1.
Series shuffle_same(const Provider& tau, int k, int trunc_order);
/// Avoidance of tau-l-nu: A(k) = (A(k-1) - x*T*V) / ((1-x*T)(1-x*V)).
Series shuffle_general(const Provider& tau, const Provider& nu, int k, int trunc_order);

/// Avoidance of the multi-pattern with the given per-block avoidance
/// providers: sum_j A_j * prod_{i<j} ((kx-1)A_i + 1).
Series multipattern(std::span<const Provider> parts, int k, int trunc_order);
/// Avoidance of tau0-phi via A_tau0 + A_phi * quasi_transform(A_tau0).
Series prefix_decomposition(const Provider& tau0, const Provider& phi, int k, int trunc_order);
/// Closed form for a multi-pattern of s descent-or-rise blocks:
/// (1 - (1 + (kx-1)/(1-x)^k)^s) / (1-kx).
Series descent_multipattern(int k, int s, int trunc_order);

/// Distribution of the maximum-non-overlapping-occurrence statistic:
/// y^s slice is A * ((kx-1)A + 1)^s.
YSeries mnd_gf(const Series& avoidance, int k, int y_degree);

/// Expansion of 1/(P + y*Q) in powers of y: slice s is (-Q)^s / P^(s+1).
/// P must have a nonzero constant term.
YSeries reciprocal_linear_in_y(const Series& p, const Series& q, int y_degree);

/// Formula dispatch for a parsed pattern: a direct registry match, a
/// three-block shuffle over registry-or-"1" blocks, or a multi-pattern over
/// registry-or-"1" blocks.  Empty when no formula applies.
std::optional<Series> formula_series(const Pogp& p, int k, int trunc_order);

}  // namespace pogp::gf
