#include "pogp/series.hpp"

#include <sstream>
#include <stdexcept>

namespace pogp {

namespace {

void check_order(int trunc_order) {
  if (trunc_order < 0) throw std::invalid_argument("truncation order must be nonnegative");
}

void check_same_order(const Series& a, const Series& b) {
  if (a.trunc_order() != b.trunc_order())
    throw std::invalid_argument("mismatched truncation orders " +
                                std::to_string(a.trunc_order()) + " and " +
                                std::to_string(b.trunc_order()));
}

}  // namespace

Series::Series(int trunc_order) {
  check_order(trunc_order);
  coeffs_.assign(static_cast<size_t>(trunc_order) + 1, Rational(0));
}

Series::Series(int trunc_order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  check_order(trunc_order);
  if (coeffs_.size() > static_cast<size_t>(trunc_order) + 1)
    throw std::invalid_argument("more coefficients than the truncation order admits");
  coeffs_.resize(static_cast<size_t>(trunc_order) + 1, Rational(0));
}

Series Series::constant(const Rational& c, int trunc_order) {
  Series s(trunc_order);
  s.coeffs_[0] = c;
  return s;
}

Series Series::monomial(const Rational& c, int degree, int trunc_order) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be nonnegative");
  Series s(trunc_order);
  if (degree <= trunc_order) s.coeffs_[degree] = c;
  return s;
}

const Rational& Series::coeff(int n) const {
  if (n < 0 || n > trunc_order())
    throw std::out_of_range("coefficient index " + std::to_string(n) + " beyond truncation order " +
                            std::to_string(trunc_order()));
  return coeffs_[n];
}

void Series::set_coeff(int n, const Rational& c) {
  if (n < 0 || n > trunc_order())
    throw std::out_of_range("coefficient index " + std::to_string(n) + " beyond truncation order " +
                            std::to_string(trunc_order()));
  coeffs_[n] = c;
}

Series Series::operator+(const Series& other) const {
  check_same_order(*this, other);
  Series out = *this;
  for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += other.coeffs_[i];
  return out;
}

Series Series::operator-(const Series& other) const {
  check_same_order(*this, other);
  Series out = *this;
  for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] -= other.coeffs_[i];
  return out;
}

Series Series::operator*(const Series& other) const {
  check_same_order(*this, other);
  Series out(trunc_order());
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; i + j < coeffs_.size(); ++j)
      out.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return out;
}

Series Series::scaled(const Rational& c) const {
  Series out = *this;
  for (auto& v : out.coeffs_) v *= c;
  return out;
}

Series Series::inverse() const {
  if (coeffs_[0] == 0) throw std::domain_error("cannot invert a series with zero constant term");
  Series out(trunc_order());
  Rational lead = Rational(1) / coeffs_[0];
  out.coeffs_[0] = lead;
  for (size_t n = 1; n < coeffs_.size(); ++n) {
    Rational acc = 0;
    for (size_t i = 1; i <= n; ++i) acc += coeffs_[i] * out.coeffs_[n - i];
    out.coeffs_[n] = -lead * acc;
  }
  return out;
}

Series Series::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative series exponent");
  Series result = constant(1, trunc_order());
  Series base = *this;
  while (exponent) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

Series Series::shifted_down() const {
  if (coeffs_[0] != 0) throw std::domain_error("cannot divide by x: nonzero constant term");
  if (trunc_order() == 0) throw std::domain_error("cannot divide by x at truncation order 0");
  Series out(trunc_order() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) out.coeffs_[i - 1] = coeffs_[i];
  return out;
}

Series Series::truncated(int new_order) const {
  if (new_order < 0 || new_order > trunc_order())
    throw std::invalid_argument("invalid truncation order " + std::to_string(new_order));
  Series out(new_order);
  for (int i = 0; i <= new_order; ++i) out.coeffs_[i] = coeffs_[i];
  return out;
}

bool Series::is_integral() const {
  for (const auto& c : coeffs_)
    if (denominator(c) != 1) return false;
  return true;
}

bool Series::is_nonnegative() const {
  for (const auto& c : coeffs_)
    if (c < 0) return false;
  return true;
}

std::string Series::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (size_t n = 0; n < coeffs_.size(); ++n) {
    if (coeffs_[n] == 0) continue;
    if (!first) out << " + ";
    if (n == 0)
      out << coeffs_[n];
    else {
      if (coeffs_[n] != 1) out << coeffs_[n] << "*";
      out << "x";
      if (n > 1) out << "^" << n;
    }
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

YSeries::YSeries(int trunc_order, int y_degree) {
  if (y_degree < 0) throw std::invalid_argument("y degree must be nonnegative");
  slices_.assign(static_cast<size_t>(y_degree) + 1, Series(trunc_order));
}

YSeries::YSeries(std::vector<Series> slices) : slices_(std::move(slices)) {
  if (slices_.empty()) throw std::invalid_argument("YSeries needs at least the y^0 slice");
  for (const auto& s : slices_)
    if (s.trunc_order() != slices_.front().trunc_order())
      throw std::invalid_argument("YSeries slices must share one truncation order");
}

const Series& YSeries::slice(int s) const {
  if (s < 0 || s > y_degree())
    throw std::out_of_range("y power " + std::to_string(s) + " beyond degree " +
                            std::to_string(y_degree()));
  return slices_[s];
}

void YSeries::set_slice(int s, Series value) {
  if (s < 0 || s > y_degree())
    throw std::out_of_range("y power " + std::to_string(s) + " beyond degree " +
                            std::to_string(y_degree()));
  if (value.trunc_order() != trunc_order())
    throw std::invalid_argument("slice truncation order mismatch");
  slices_[s] = std::move(value);
}

Series YSeries::at_y_one() const {
  Series out = slices_.front();
  for (size_t s = 1; s < slices_.size(); ++s) out = out + slices_[s];
  return out;
}

}  // namespace pogp
