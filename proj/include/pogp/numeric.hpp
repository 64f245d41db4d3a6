#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pogp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(n, k); zero for k < 0 or k > n.
BigInt binomial(int n, int k);

}  // namespace pogp
