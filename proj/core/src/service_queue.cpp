// Copyright (c) 2026 The edtq authors
// SPDX-License-Identifier: Apache-2.0

#include "edtq/service_queue.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "edtq/errors.hpp"

namespace edtq {

namespace {
constexpr double kStabilityMargin = 1e-9;
}

MomentPair moments_pon_continuous(double ttr, const ChannelParams& params) {
  const double lambda = params.lambda, mu = params.mu;
  const double r = ttr / mu;
  MomentPair m;
  m.m1 = ttr + lambda * (1.0 + r);
  m.m2 = lambda * lambda * (r * r + 4.0 * r + 2.0) +
         2.0 * lambda * ttr * (1.0 + r) + ttr * ttr;
  return m;
}

MomentPair moments_poff_continuous(double ttr, const ChannelParams& params) {
  const double lambda = params.lambda, mu = params.mu;
  const double r = ttr / mu;
  MomentPair m;
  m.m1 = ttr + lambda * r;
  m.m2 = lambda * lambda * (r * r + 2.0 * r) + 2.0 * lambda * ttr * r +
         ttr * ttr;
  return m;
}

MomentPair moments_pon_periodic(double ttr, const ChannelParams& params,
                                double ts, BetaModel model) {
  if (!(ts > 0.0))
    throw std::domain_error("moments_pon_periodic: ts must be positive");
  const double b = beta(params, ts, model);
  const double r = ttr / params.mu;
  const double en = (1.0 + r) / (1.0 - b);
  const double en2 = (r * r + 4.0 * r + 2.0) / ((1.0 - b) * (1.0 - b)) -
                     (r + 1.0) / (1.0 - b);
  MomentPair m;
  m.m1 = ttr + ts * en;
  m.m2 = ts * ts * en2 + 2.0 * ts * ttr * en + ttr * ttr;
  return m;
}

MomentPair moments_poff_periodic(double ttr, const ChannelParams& params,
                                 double ts, BetaModel model) {
  if (!(ts > 0.0))
    throw std::domain_error("moments_poff_periodic: ts must be positive");
  const double b = beta(params, ts, model);
  const double r = ttr / params.mu;
  const double g = ts / (1.0 - b);
  MomentPair m;
  m.m1 = ttr * (1.0 + g / params.mu);
  m.m2 = g * g * (r * r + 2.0 * r) - g * ts * r +
         g * 2.0 * ttr * ttr / params.mu + ttr * ttr;
  return m;
}

double p_on_type2(const ChannelParams& params, double psi) {
  if (!(psi > 0.0)) throw std::domain_error("p_on_type2: psi must be positive");
  const double lambda = params.lambda, mu = params.mu;
  return lambda * psi / (lambda * psi + lambda * mu + mu * psi);
}

MomentPair type2_moments(double pon2, const MomentPair& mom_on,
                         const MomentPair& mom_off) {
  if (!(pon2 >= 0.0 && pon2 <= 1.0))
    throw std::domain_error("type2_moments: pon2 must lie in [0, 1]");
  return {pon2 * mom_on.m1 + (1.0 - pon2) * mom_off.m1,
          pon2 * mom_on.m2 + (1.0 - pon2) * mom_off.m2};
}

QueueSolution mg1_solve(double psi, const MomentPair& type1,
                        const MomentPair& type2) {
  const double bound = type1.m1;
  if (!(psi > bound * (1.0 + kStabilityMargin)))
    throw instability_error(
        "mg1_solve: unstable queue, psi must exceed E[ST_Type1] = " +
            std::to_string(bound),
        bound);
  const double denom = psi + type2.m1 - type1.m1;
  QueueSolution s;
  s.e_st = psi * type2.m1 / denom;
  s.p0 = (psi - type1.m1) / denom;
  s.e_st2 = ((psi - type1.m1) * type2.m2 + type2.m1 * type1.m2) / denom;
  s.e_q = s.e_st2 / (2.0 * (psi - type1.m1));
  s.e_nq = s.e_q / psi;
  s.e_d = s.e_st + s.e_q;
  const double u1 = (1.0 - s.p0) * type1.m1;
  const double u2 = s.p0 * type2.m1;
  const double r1 = type1.m2 / (2.0 * type1.m1);
  const double r2 = type2.m2 / (2.0 * type2.m1);
  s.e_r = (u1 * r1 + u2 * r2) / (u1 + u2);
  return s;
}

double mg1_conventional(double psi, const MomentPair& overall) {
  if (!(psi > overall.m1 * (1.0 + kStabilityMargin)))
    throw instability_error(
        "mg1_conventional: unstable queue, psi must exceed E[ST] = " +
            std::to_string(overall.m1),
        overall.m1);
  return overall.m1 + overall.m2 / (2.0 * (psi - overall.m1));
}

}  // namespace edtq
