#pragma once

// Exact truncated power series over the rationals.  A Series carries
// coefficients c_0..c_N of x^0..x^N for a fixed truncation order N; all
// arithmetic is exact and stays at that order.  YSeries adds a second
// variable y of bounded degree, stored as one Series per power of y.

#include <string>
#include <vector>

#include "pogp/numeric.hpp"

namespace pogp {

class Series {
 public:
  /// Zero series truncated at x^trunc_order.
  explicit Series(int trunc_order);
  Series(int trunc_order, std::vector<Rational> coeffs);  // pads with zeros

  static Series constant(const Rational& c, int trunc_order);
  /// c * x^degree.
  static Series monomial(const Rational& c, int degree, int trunc_order);

  int trunc_order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coeff(int n) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  void set_coeff(int n, const Rational& c);

  /// Operands must share the truncation order (std::invalid_argument).
  Series operator+(const Series& other) const;
  Series operator-(const Series& other) const;
  Series operator*(const Series& other) const;
  bool operator==(const Series&) const = default;

  Series scaled(const Rational& c) const;
  /// Multiplicative inverse; std::domain_error on zero constant term.
  Series inverse() const;
  /// Nonnegative integer power.
  Series pow(int exponent) const;
  /// Division by x; std::domain_error unless the constant term is zero.
  /// The result's truncation order drops by one.
  Series shifted_down() const;
  /// Keeps coefficients 0..new_order; new_order must not exceed the current.
  Series truncated(int new_order) const;

  bool is_integral() const;     // every coefficient an integer
  bool is_nonnegative() const;  // every coefficient >= 0

  /// "1 + 2*x + 4*x^2 + ..."; zero terms omitted (plain "0" if all vanish).
  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

/// Series in x and y, truncated at x^N with y-degree at most S: the y^s
/// "slice" collects the coefficient series of y^s.
class YSeries {
 public:
  YSeries(int trunc_order, int y_degree);
  explicit YSeries(std::vector<Series> slices);  // one per y power, same order

  int trunc_order() const { return slices_.front().trunc_order(); }
  int y_degree() const { return static_cast<int>(slices_.size()) - 1; }
  const Series& slice(int s) const;
  void set_slice(int s, Series value);
  /// Coefficient of y^s x^n.
  const Rational& coeff(int n, int s) const { return slice(s).coeff(n); }
  /// Sum of the slices: the series at y = 1.
  Series at_y_one() const;

  bool operator==(const YSeries&) const = default;

 private:
  std::vector<Series> slices_;
};

}  // namespace pogp
