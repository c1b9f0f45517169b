// Copyright (c) 2026 The edtq authors
// SPDX-License-Identifier: Apache-2.0

#include "edtq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

#include "edtq/errors.hpp"

namespace edtq::math {

namespace {

// 15-point Kronrod nodes/weights on [-1, 1] with the embedded 7-point
// Gauss weights (abscissae symmetric about 0).
constexpr double kKronrodNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Interval {
  double a, b, value, error;
  bool operator<(const Interval& o) const { return error < o.error; }
};

Interval eval_gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fk[15];
  for (int i = 0; i < 7; ++i) {
    fk[i] = f(c - h * kKronrodNodes[i]);
    fk[14 - i] = f(c + h * kKronrodNodes[i]);
  }
  fk[7] = f(c);
  double kronrod = 0.0, gauss = 0.0;
  for (int i = 0; i < 7; ++i)
    kronrod += kKronrodWeights[i] * (fk[i] + fk[14 - i]);
  kronrod += kKronrodWeights[7] * fk[7];
  // Gauss points are the odd-index Kronrod nodes.
  for (int i = 0; i < 3; ++i)
    gauss += kGaussWeights[i] * (fk[2 * i + 1] + fk[13 - 2 * i]);
  gauss += kGaussWeights[3] * fk[7];
  kronrod *= h;
  gauss *= h;
  const double diff = std::abs(kronrod - gauss);
  // standard QUADPACK-style sharpened estimate
  const double err = diff > 0.0 ? diff * std::min(1.0, std::pow(200.0 * diff, 1.5))
                                : 0.0;
  return {a, b, kronrod, std::max(err, std::abs(kronrod) * 1e-16)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol, std::size_t max_evals) {
  if (!(b >= a)) throw std::domain_error("integrate: requires b >= a");
  if (a == b) return {0.0, 0.0, 0};
  std::priority_queue<Interval> heap;
  std::size_t evals = 15;
  Interval whole = eval_gk15(f, a, b);
  double total = whole.value;
  double total_err = whole.error;
  heap.push(whole);
  while (total_err > abs_tol && !heap.empty()) {
    Interval worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const bool at_machine_floor =
        worst.error <= 1e-17 * (1.0 + std::abs(total)) || mid <= worst.a ||
        mid >= worst.b;
    if (at_machine_floor) continue;  // cannot be improved; keep its error
    if (evals + 30 > max_evals)
      throw numeric_error("integrate: evaluation budget exhausted");
    Interval left = eval_gk15(f, worst.a, mid);
    Interval right = eval_gk15(f, mid, worst.b);
    evals += 30;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  return {total, total_err, evals};
}

double envelope_cutoff(const std::function<double(double)>& f, double a) {
  // Geometric scan: find the peak, then the first point past it where the
  // integrand has dropped below 1e-16 of the peak (two consecutive hits,
  // so an isolated dip between modes does not truncate the support).
  const double h0 = 1e-3 * (1.0 + std::abs(a));
  double peak = 0.0;
  double prev_ok = false;
  double step = h0;
  double cutoff = a + h0;
  for (int j = 0; j < 120; ++j) {
    const double x = a + step;
    const double v = std::abs(f(x));
    if (v > peak) {
      peak = v;
      prev_ok = false;
    } else if (peak > 0.0 && v < 1e-16 * peak) {
      if (prev_ok) return x;
      prev_ok = true;
      cutoff = x;
    } else {
      prev_ok = false;
    }
    step *= 1.5;
    if (!std::isfinite(a + step)) break;
  }
  return std::max(cutoff, a + step);
}

QuadratureResult integrate_upper_auto(const std::function<double(double)>& f,
                                      double a, double abs_tol,
                                      std::size_t max_evals) {
  const double b = envelope_cutoff(f, a);
  return integrate(f, a, b, abs_tol, max_evals);
}

}  // namespace edtq::math
