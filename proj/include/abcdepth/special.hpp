// Copyright (c) 2026 abcdepth contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef ABCDEPTH_SPECIAL_HPP
#define ABCDEPTH_SPECIAL_HPP

namespace abcdepth {

// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
// Series expansion below x < a+1, continued fraction above; absolute error
// is held to 1e-10 or better across the benchmark range.
double regularized_gamma_p(double a, double x);

// P(chi^2(dof) <= x) = P(dof/2, x/2).
double chi_square_cdf(double x, int dof);

} // namespace abcdepth

#endif
