// Copyright (c) 2026 The edtq authors
// SPDX-License-Identifier: Apache-2.0

#ifndef EDTQ_CHANNEL_HPP
#define EDTQ_CHANNEL_HPP

#include <optional>

namespace edtq {

// Two-state alternating-exponential model of primary-user activity.
// Parameters are mean durations, not rates: lambda is the mean busy period
// and mu the mean idle period. Rate conversions (1/lambda, 1/mu) happen
// inside the operations to keep a single inversion point.
struct ChannelParams {
  double lambda;  // mean busy duration, > 0
  double mu;      // mean idle duration, > 0

  ChannelParams(double lambda_, double mu_);
};

enum class SensingMode { Continuous, Periodic };

struct SensingStrategy {
  SensingMode mode = SensingMode::Continuous;
  double ts = 0.0;  // sensing period, > 0 iff Periodic

  static SensingStrategy continuous() { return {SensingMode::Continuous, 0.0}; }
  static SensingStrategy periodic(double ts);
};

// Which form of the on-probability at sensing instants to use. Exact is
// the default everywhere; the small-period approximation e^{-ts/lambda}
// exists only for approximation-sensitivity studies and must be requested
// explicitly.
enum class BetaModel { Exact, SmallTsApprox };

// Stationary probability that the PU is busy, lambda / (lambda + mu).
double stationary_on_prob(const ChannelParams& params);

// Probability that the PU is busy at a sensing instant given it was busy
// one sensing period earlier:
//   lambda/(lambda+mu) + mu/(lambda+mu) e^{-(1/lambda + 1/mu) ts}.
// Valid for every ts > 0; lies in (stationary_on_prob, 1).
double beta(const ChannelParams& params, double ts,
            BetaModel model = BetaModel::Exact);

// Probability the PU is busy a time t after an instant at which it was
// known idle: lambda/(lambda+mu) [1 - e^{-(1/lambda + 1/mu) t}].
double p_on_given_off(const ChannelParams& params, double t);

}  // namespace edtq

#endif  // EDTQ_CHANNEL_HPP
