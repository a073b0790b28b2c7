// Copyright (c) 2026 abcdepth contributors
// SPDX-License-Identifier: Apache-2.0
#include "abcdepth/special.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "abcdepth/error.hpp"

namespace abcdepth {
namespace {

constexpr int kMaxIterations = 500;
constexpr double kEps = 1e-15;

// Lower-tail series: P(a,x) = x^a e^-x / Gamma(a) * sum_k x^k / (a(a+1)...(a+k)).
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  double ap = a;
  for (int i = 0; i < kMaxIterations; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper-tail continued fraction (modified Lentz), returns Q(a,x).
double gamma_q_fraction(double a, double x) {
  const double tiny = std::numeric_limits<double>::min() / kEps;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIterations; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

} // namespace

double regularized_gamma_p(double a, double x) {
  if (!(a > 0.0)) {
    fail(Errc::invalid_argument, "gamma shape must be positive, got " + std::to_string(a));
  }
  if (x < 0.0 || std::isnan(x)) {
    fail(Errc::invalid_argument, "gamma argument must be non-negative, got " + std::to_string(x));
  }
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_fraction(a, x);
}

double chi_square_cdf(double x, int dof) {
  if (dof < 1) {
    fail(Errc::invalid_argument,
         "chi-square degrees of freedom must be at least 1, got " + std::to_string(dof));
  }
  if (x < 0.0 || std::isnan(x)) {
    fail(Errc::invalid_argument, "chi-square argument must be non-negative, got " + std::to_string(x));
  }
  return regularized_gamma_p(static_cast<double>(dof) / 2.0, x / 2.0);
}

} // namespace abcdepth
