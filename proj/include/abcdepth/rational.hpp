// Copyright (c) 2026 abcdepth contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef ABCDEPTH_RATIONAL_HPP
#define ABCDEPTH_RATIONAL_HPP

#include <cstdint>
#include <numeric>

#include "abcdepth/error.hpp"

namespace abcdepth {

// Exact fraction for level thresholds. Denominator is kept positive.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) fail(Errc::invalid_argument, "rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.num * b.den <= b.num * a.den;
  }
};

// Ball size floor(n * (1 - alpha) + 1) computed in integer arithmetic.
inline std::int64_t ball_size_for(std::int64_t n, const Rational& alpha) {
  // n * (1 - p/q) + 1 == (n*(q - p) + q) / q, exact; alpha <= 1 keeps it nonnegative.
  const std::int64_t p = alpha.num;
  const std::int64_t q = alpha.den;
  return (n * (q - p) + q) / q;
}

} // namespace abcdepth

#endif
