// Copyright (c) 2026 The edtq authors
// SPDX-License-Identifier: Apache-2.0

#ifndef EDTQ_QUADRATURE_HPP
#define EDTQ_QUADRATURE_HPP

#include <cstddef>
#include <functional>

namespace edtq::math {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

inline constexpr double kQuadAbsTol = 1e-8;
inline constexpr std::size_t kQuadMaxEvals = 1'000'000;

// Globally adaptive Gauss-Kronrod (G7, K15) integration over [a, b].
// Intervals are bisected worst-error-first until the summed error estimate
// drops below abs_tol. Exceeding the evaluation budget throws numeric_error;
// there is no silent degradation.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol = kQuadAbsTol,
                           std::size_t max_evals = kQuadMaxEvals);

// Integral over [a, inf). The finite upper limit is placed where the
// integrand has fallen below 1e-16 of its observed peak on a geometric
// scan grid, then `integrate` is applied to the finite interval.
QuadratureResult integrate_upper_auto(const std::function<double(double)>& f,
                                      double a, double abs_tol = kQuadAbsTol,
                                      std::size_t max_evals = kQuadMaxEvals);

// Upper cutoff used by integrate_upper_auto, exposed for callers that need
// the same support bound (plot ranges, histogram clipping).
double envelope_cutoff(const std::function<double(double)>& f, double a);

}  // namespace edtq::math

#endif  // EDTQ_QUADRATURE_HPP
