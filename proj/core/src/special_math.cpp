// Copyright (c) 2026 The edtq authors
// SPDX-License-Identifier: Apache-2.0

#include "edtq/special_math.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "edtq/errors.hpp"

namespace edtq::math {

namespace {

constexpr int kMaxSeriesTerms = 10000;
constexpr double kSeriesStop = 1e-16;  // |term| < kSeriesStop * |sum|

// Power series for I_nu(x), nu in {0,1}, all terms positive. Returns the
// unscaled value; only used for x < 30 where e^{-x} I_nu(x) stays in range.
double bessel_i_series(int order, double x) {
  const double q = 0.25 * x * x;
  // k = 0 term: (x/2)^nu / nu!
  double term = (order == 0) ? 1.0 : 0.5 * x;
  double sum = term;
  double comp = 0.0;  // Kahan compensation
  for (int k = 1; k <= kMaxSeriesTerms; ++k) {
    term *= q / (static_cast<double>(k) * (k + order));
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (term < kSeriesStop * sum) return sum;
  }
  throw numeric_error("bessel_i_series: term cap exceeded at x=" + std::to_string(x));
}

// Asymptotic expansion of e^{-x} I_nu(x) for large x:
//   1/sqrt(2 pi x) * sum_k t_k,   t_0 = 1,
//   t_k = t_{k-1} * -(4 nu^2 - (2k-1)^2) / (8 x k).
double bessel_i_scaled_asymptotic(int order, double x) {
  const double mu = 4.0 * order * order;
  double term = 1.0;
  double sum = 1.0;
  double prev_abs = 1.0;
  for (int k = 1; k <= 40; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= -(mu - odd * odd) / (8.0 * x * k);
    if (std::abs(term) >= prev_abs) break;  // divergent tail reached
    sum += term;
    prev_abs = std::abs(term);
    if (std::abs(term) < kSeriesStop * std::abs(sum)) break;
  }
  return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

}  // namespace

double bessel_i_scaled(int order, double x) {
  if (order != 0 && order != 1)
    throw std::domain_error("bessel_i_scaled: order must be 0 or 1");
  if (x < 0.0 || std::isnan(x))
    throw std::domain_error("bessel_i_scaled: negative argument");
  if (x == 0.0) return order == 0 ? 1.0 : 0.0;
  if (x < 30.0) return std::exp(-x) * bessel_i_series(order, x);
  return bessel_i_scaled_asymptotic(order, x);
}

double kummer_1f1_terminating(long a_neg_int, long b, double x) {
  if (a_neg_int > 0)
    throw std::domain_error("kummer_1f1_terminating: first parameter must be <= 0");
  if (b <= 0)
    throw std::domain_error("kummer_1f1_terminating: second parameter must be positive");
  const long m = -a_neg_int;  // series terminates after m+1 terms
  if (m + 1 > kMaxSeriesTerms)
    throw numeric_error("kummer_1f1_terminating: series length " +
                        std::to_string(m + 1) + " exceeds term cap");
  double term = 1.0;
  double sum = 1.0;
  double comp = 0.0;
  for (long k = 0; k < m; ++k) {
    // Pochhammer recurrence: next term multiplies (a+k) / ((b+k)(k+1)) * x.
    term *= static_cast<double>(a_neg_int + k) /
            (static_cast<double>(b + k) * static_cast<double>(k + 1)) * x;
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

double erlang_pdf(unsigned k, double scale, double t) {
  if (k == 0) throw std::domain_error("erlang_pdf: shape must be >= 1");
  if (!(scale > 0.0)) throw std::domain_error("erlang_pdf: scale must be positive");
  if (t < 0.0) throw std::domain_error("erlang_pdf: negative time");
  if (t == 0.0) return k == 1 ? 1.0 / scale : 0.0;
  const double r = t / scale;
  if (k <= 20 && r < 500.0) {
    double p = std::exp(-r) / scale;
    for (unsigned j = 1; j < k; ++j) p *= r / static_cast<double>(j);
    return p;
  }
  const double log_pdf = (k - 1.0) * std::log(t) - r -
                         static_cast<double>(k) * std::log(scale) -
                         std::lgamma(static_cast<double>(k));
  return std::exp(log_pdf);
}

double neg_binomial_pmf(unsigned k, double beta, std::uint64_t n) {
  if (k == 0) throw std::domain_error("neg_binomial_pmf: k must be >= 1");
  if (!(beta >= 0.0 && beta < 1.0))
    throw std::domain_error("neg_binomial_pmf: beta must lie in [0, 1)");
  if (n < k) return 0.0;
  if (n == k && beta == 0.0) return 1.0;
  if (n <= 60) {
    // exact product: C(n-1, k-1) (1-beta)^k beta^{n-k}
    double c = 1.0;
    for (std::uint64_t j = 1; j < k; ++j)
      c *= static_cast<double>(n - k + j) / static_cast<double>(j);
    return c * std::pow(1.0 - beta, static_cast<double>(k)) *
           std::pow(beta, static_cast<double>(n - k));
  }
  const double logp = log_binomial(n - 1, k - 1) +
                      static_cast<double>(k) * std::log1p(-beta) +
                      static_cast<double>(n - k) * std::log(beta);
  return std::exp(logp);
}

double poisson_pmf(std::uint64_t m, double rate) {
  if (rate < 0.0) throw std::domain_error("poisson_pmf: negative rate");
  if (rate == 0.0) return m == 0 ? 1.0 : 0.0;
  const double logp = static_cast<double>(m) * std::log(rate) - rate -
                      std::lgamma(static_cast<double>(m) + 1.0);
  return std::exp(logp);
}

double log_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

}  // namespace edtq::math
