#pragma once

#include <algorithm>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace degdiv {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational. Probability values, Caro-Wei sums and
/// distance masses are all kept in this form so that ceiling comparisons and
/// strict inequalities never hinge on float rounding.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow2(unsigned e) {
  BigInt b = 1;
  b <<= e;
  return b;
}

/// C(n, k) by the rolling product; every intermediate division is exact.
inline BigInt binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  k = std::min(k, n - k);
  BigInt c = 1;
  for (long i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

/// Smallest integer >= q. Only used with q >= 0.
inline BigInt rational_ceil(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt d = num / den;
  if (num % den != 0 && num > 0) ++d;
  return d;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// "num/den" (or "num" when integral); exact, suitable for reports.
inline std::string rat_str(const Rational& q) { return q.str(); }

}  // namespace degdiv
