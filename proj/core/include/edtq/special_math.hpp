// Copyright (c) 2026 The edtq authors
// SPDX-License-Identifier: Apache-2.0

#ifndef EDTQ_SPECIAL_MATH_HPP
#define EDTQ_SPECIAL_MATH_HPP

#include <cstdint>

namespace edtq::math {

// Exponentially scaled modified Bessel function of the first kind,
// e^{-x} I_order(x), for order 0 or 1 and x >= 0. The scaling keeps the
// result in (0, 1] for all x, so callers can add the exponent back in the
// log domain. Power series below x = 30, asymptotic expansion above.
// Relative error <= 1e-12 for x <= 1e6.
double bessel_i_scaled(int order, double x);

// Terminating confluent hypergeometric series 1F1(a; b; x) for a a
// nonpositive integer and b a positive integer. Pochhammer factors are
// carried by recurrence and the sum is accumulated with compensated
// summation, left to right. Finite for every finite x.
double kummer_1f1_terminating(long a_neg_int, long b, double x);

// Erlang (Gamma with integer shape) density
//   t^{k-1} e^{-t/scale} / (scale^k (k-1)!).
// Switches to log-domain evaluation for k > 20 or large t/scale.
double erlang_pdf(unsigned k, double scale, double t);

// Negative binomial mass: probability that the n-th Bernoulli trial yields
// the k-th success when each trial succeeds with probability 1-beta,
//   (1-beta)^k beta^{n-k} C(n-1, k-1).
// Returns 0 for n < k (impossible event, not an error); log-gamma route
// for n > 60.
double neg_binomial_pmf(unsigned k, double beta, std::uint64_t n);

// Poisson mass e^{-rate} rate^m / m!, shared by the slot-count law.
double poisson_pmf(std::uint64_t m, double rate);

// log C(n, k) via lgamma; exact small cases handled by the callers.
double log_binomial(std::uint64_t n, std::uint64_t k);

}  // namespace edtq::math

#endif  // EDTQ_SPECIAL_MATH_HPP
