// Copyright (c) 2026 The edtq authors
// SPDX-License-Identifier: Apache-2.0

#include "edtq/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace edtq {

ChannelParams::ChannelParams(double lambda_, double mu_)
    : lambda(lambda_), mu(mu_) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::domain_error("ChannelParams: lambda must be positive and finite");
  if (!(mu > 0.0) || !std::isfinite(mu))
    throw std::domain_error("ChannelParams: mu must be positive and finite");
}

SensingStrategy SensingStrategy::periodic(double ts) {
  if (!(ts > 0.0))
    throw std::domain_error("SensingStrategy: periodic sensing requires ts > 0");
  return {SensingMode::Periodic, ts};
}

double stationary_on_prob(const ChannelParams& params) {
  return params.lambda / (params.lambda + params.mu);
}

double beta(const ChannelParams& params, double ts, BetaModel model) {
  if (!(ts > 0.0)) throw std::domain_error("beta: ts must be positive");
  if (model == BetaModel::SmallTsApprox) return std::exp(-ts / params.lambda);
  const double pon = stationary_on_prob(params);
  const double rate = 1.0 / params.lambda + 1.0 / params.mu;
  return pon + (1.0 - pon) * std::exp(-rate * ts);
}

double p_on_given_off(const ChannelParams& params, double t) {
  if (t < 0.0) throw std::domain_error("p_on_given_off: t must be nonnegative");
  const double rate = 1.0 / params.lambda + 1.0 / params.mu;
  return stationary_on_prob(params) * (-std::expm1(-rate * t));
}

}  // namespace edtq
