// Copyright (c) 2026 The edtq authors
// SPDX-License-Identifier: Apache-2.0

#include "edtq/edt_dist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "edtq/errors.hpp"
#include "edtq/log_scaled.hpp"
#include "edtq/quadrature.hpp"
#include "edtq/special_math.hpp"

namespace edtq {

namespace {

constexpr double kPmfTailTol = 1e-12;
constexpr std::uint64_t kPmfHardCap = 200'000;

// Bracket of the continuous-sensing delivery density for waiting time w:
//   I0(z) + sqrt(ttr mu / (lambda w)) I1(z),  z = 2 sqrt(ttr w / (mu lambda)),
// times e^{-ttr/mu - w/lambda}. The 1/sqrt(w) prefactor cancels against
// I1(z) ~ z/2 as w -> 0, so the w -> 0 branch is expanded explicitly.
double bessel_mix_density(double w, double ttr, double lambda, double mu,
                          double i1_weight_sq) {
  const double z = 2.0 * std::sqrt(ttr * w / (mu * lambda));
  if (z < 1e-4) {
    const double z2 = z * z;
    const double i0 = 1.0 + 0.25 * z2 + z2 * z2 / 64.0;
    const double i1_over_halfz = 1.0 + 0.125 * z2 + z2 * z2 / 192.0;
    // sqrt(i1_weight_sq / w) * I1(z) with I1 ~ (z/2) * i1_over_halfz
    const double i1_part =
        std::sqrt(i1_weight_sq * ttr / (mu * lambda)) * i1_over_halfz;
    return (i0 + i1_part) * std::exp(-ttr / mu - w / lambda);
  }
  const double i0s = math::bessel_i_scaled(0, z);
  const double i1s = math::bessel_i_scaled(1, z);
  const double bracket = i0s + std::sqrt(i1_weight_sq / w) * i1s;
  return LogScaledValue::from_value(bracket)
      .scaled_by_exp(z - ttr / mu - w / lambda)
      .value();
}

void require_positive_ttr(double ttr, const char* who) {
  if (!(ttr > 0.0)) throw std::domain_error(std::string(who) + ": ttr must be positive");
}

}  // namespace

RayleighTtrSpec::RayleighTtrSpec(double h, double w, double snr)
    : entropy_h(h), bandwidth_w(w), mean_snr(snr) {
  if (!(h > 0.0) || !(w > 0.0) || !(snr > 0.0))
    throw std::domain_error("RayleighTtrSpec: all fields must be positive");
}

double prob_k_slots(unsigned k, double ttr, double mu) {
  if (k == 0) throw std::domain_error("prob_k_slots: k must be >= 1");
  if (ttr < 0.0) throw std::domain_error("prob_k_slots: ttr must be nonnegative");
  if (!(mu > 0.0)) throw std::domain_error("prob_k_slots: mu must be positive");
  return math::poisson_pmf(k - 1, ttr / mu);
}

double waiting_pdf_pon(double t, double ttr, const ChannelParams& params) {
  if (t < 0.0) throw std::domain_error("waiting_pdf_pon: t must be nonnegative");
  const double lambda = params.lambda, mu = params.mu;
  const double z = 2.0 * std::sqrt(ttr * t / (mu * lambda));
  const double i0s = math::bessel_i_scaled(0, z);
  return LogScaledValue::from_value(i0s / lambda)
      .scaled_by_exp(z - ttr / mu - t / lambda)
      .value();
}

MixedDistribution waiting_dist_poff(double ttr, const ChannelParams& params) {
  const double lambda = params.lambda, mu = params.mu;
  const double atom_mass = std::exp(-ttr / mu);
  std::vector<Atom> atoms;
  if (atom_mass > 0.0) atoms.push_back({0.0, atom_mass});
  auto density = [ttr, lambda, mu](double t) -> double {
    if (t < 0.0 || ttr == 0.0) return 0.0;
    if (t == 0.0) return ttr / (mu * lambda) * std::exp(-ttr / mu);
    const double z = 2.0 * std::sqrt(ttr * t / (mu * lambda));
    if (z < 1e-4) {
      const double z2 = z * z;
      return ttr / (mu * lambda) * (1.0 + 0.125 * z2 + z2 * z2 / 192.0) *
             std::exp(-ttr / mu - t / lambda);
    }
    const double i1s = math::bessel_i_scaled(1, z);
    return LogScaledValue::from_value(std::sqrt(ttr / (mu * lambda * t)) * i1s)
        .scaled_by_exp(z - ttr / mu - t / lambda)
        .value();
  };
  return MixedDistribution(std::move(atoms), std::move(density), 0.0);
}

MixedDistribution edt_pdf_continuous(double ttr, const ChannelParams& params) {
  require_positive_ttr(ttr, "edt_pdf_continuous");
  const double lambda = params.lambda, mu = params.mu;
  const double atom_mass = mu / (lambda + mu) * std::exp(-ttr / mu);
  std::vector<Atom> atoms{{ttr, atom_mass}};
  auto density = [ttr, lambda, mu](double t) -> double {
    const double w = t - ttr;
    if (w < 0.0) return 0.0;
    // i1 weight: ttr mu / lambda (to be divided by w under the root)
    return bessel_mix_density(w, ttr, lambda, mu, ttr * mu / lambda) /
           (lambda + mu);
  };
  return MixedDistribution(std::move(atoms), std::move(density), ttr);
}

double waiting_pmf_pon_periodic(std::uint64_t n, double ttr,
                                const ChannelParams& params, double ts,
                                BetaModel model) {
  if (n == 0) return 0.0;  // a busy PU forces at least one sensing interval
  const double b = beta(params, ts, model);
  const double x = ttr * (1.0 - b) / (params.mu * b);
  const double f1 =
      math::kummer_1f1_terminating(1 - static_cast<long>(n), 1, -x);
  return (1.0 - b) * std::pow(b, static_cast<double>(n - 1)) *
         std::exp(-ttr / params.mu) * f1;
}

double waiting_pmf_poff_periodic(std::uint64_t n, double ttr,
                                 const ChannelParams& params, double ts,
                                 BetaModel model) {
  if (n == 0) return std::exp(-ttr / params.mu);
  const double b = beta(params, ts, model);
  const double x = ttr * (1.0 - b) / (params.mu * b);
  const double f1 =
      math::kummer_1f1_terminating(1 - static_cast<long>(n), 2, -x);
  return ttr * (1.0 - b) / params.mu *
         std::pow(b, static_cast<double>(n - 1)) *
         std::exp(-ttr / params.mu) * f1;
}

DiscreteEdtPmf edt_pmf_periodic(double ttr, const ChannelParams& params,
                                double ts, BetaModel model) {
  require_positive_ttr(ttr, "edt_pmf_periodic");
  if (!(ts > 0.0)) throw std::domain_error("edt_pmf_periodic: ts must be positive");
  const double b = beta(params, ts, model);
  const double pon = stationary_on_prob(params);
  // geometric bound: beta^N / (1 - beta) < tail tolerance
  const double n_geom =
      (std::log(kPmfTailTol) + std::log1p(-b)) / std::log(b);
  const std::uint64_t n_min =
      static_cast<std::uint64_t>(std::max(1.0, std::ceil(n_geom)));

  DiscreteEdtPmf pmf;
  pmf.ttr = ttr;
  pmf.ts = ts;
  double cumulative = 0.0;
  for (std::uint64_t n = 0;; ++n) {
    if (n > kPmfHardCap)
      throw numeric_error("edt_pmf_periodic: truncation cap exceeded");
    const double p = pon * waiting_pmf_pon_periodic(n, ttr, params, ts, model) +
                     (1.0 - pon) *
                         waiting_pmf_poff_periodic(n, ttr, params, ts, model);
    pmf.probs.push_back(p);
    cumulative += p;
    if (n >= n_min && 1.0 - cumulative < kPmfTailTol) break;
  }
  return pmf;
}

double ttr_pdf_rayleigh(double t, const RayleighTtrSpec& spec) {
  if (!(t > 0.0)) throw std::domain_error("ttr_pdf_rayleigh: t must be positive");
  const double a = spec.entropy_h / (spec.bandwidth_w * t);
  // 2^a - 1 overflows the exponential weight long before double range ends.
  if (a * std::numbers::ln2 > 700.0) return 0.0;
  const double pow2a = std::exp2(a);
  const double gamma_t = pow2a - 1.0;
  if (gamma_t / spec.mean_snr > 745.0) return 0.0;
  const double jac = pow2a * std::numbers::ln2 * spec.entropy_h /
                     (spec.bandwidth_w * t * t);
  return std::exp(-gamma_t / spec.mean_snr) / spec.mean_snr * jac;
}

double ttr_pdf_rayleigh_as_printed(double t, const RayleighTtrSpec& spec) {
  if (!(t > 0.0))
    throw std::domain_error("ttr_pdf_rayleigh_as_printed: t must be positive");
  const double h_eff = spec.entropy_h / spec.bandwidth_w;
  const double gbar = spec.mean_snr;
  const double a = h_eff / t;
  if (a > 700.0) return 0.0;
  const double ea = std::exp(a);
  if ((ea - 1.0) / gbar > 745.0) return 0.0;
  return h_eff / (gbar * t * t) * std::exp(1.0 / gbar + a - ea / gbar);
}

double edt_pdf_random_ttr_continuous(double t, const RayleighTtrSpec& spec,
                                     const ChannelParams& params) {
  if (!(t > 0.0))
    throw std::domain_error("edt_pdf_random_ttr_continuous: t must be positive");
  const double lambda = params.lambda, mu = params.mu;
  auto integrand = [&](double ttr) -> double {
    const double w = t - ttr;
    if (w <= 0.0 || ttr <= 0.0) return 0.0;
    const double f_ttr = ttr_pdf_rayleigh(ttr, spec);
    if (f_ttr == 0.0) return 0.0;
    return bessel_mix_density(w, ttr, lambda, mu, ttr * mu / lambda) /
           (lambda + mu) * f_ttr;
  };
  const double continuous_part = math::integrate(integrand, 0.0, t).value;
  // atom of the conditional law at ttr = t, added analytically
  const double atom_part =
      mu / (lambda + mu) * std::exp(-t / mu) * ttr_pdf_rayleigh(t, spec);
  return continuous_part + atom_part;
}

double edt_pdf_random_ttr_periodic(double t, const RayleighTtrSpec& spec,
                                   const ChannelParams& params, double ts) {
  if (!(t > 0.0))
    throw std::domain_error("edt_pdf_random_ttr_periodic: t must be positive");
  if (!(ts > 0.0))
    throw std::domain_error("edt_pdf_random_ttr_periodic: ts must be positive");
  const double pon = stationary_on_prob(params);
  double sum = 0.0;
  for (std::uint64_t n = 0;; ++n) {
    const double ttr = t - static_cast<double>(n) * ts;
    if (ttr <= 0.0) break;
    const double f_ttr = ttr_pdf_rayleigh(ttr, spec);
    if (f_ttr > 0.0) {
      const double mass =
          pon * waiting_pmf_pon_periodic(n, ttr, params, ts) +
          (1.0 - pon) * waiting_pmf_poff_periodic(n, ttr, params, ts);
      sum += mass * f_ttr;
    }
  }
  return sum;
}

double edt_pdf_oneshot(double t, const RayleighTtrSpec& spec,
                       const ChannelParams& params,
                       const SensingStrategy& strategy) {
  if (!(t > 0.0)) throw std::domain_error("edt_pdf_oneshot: t must be positive");
  const double lambda = params.lambda, mu = params.mu;
  const double pon = stationary_on_prob(params);
  const double immediate = (1.0 - pon) * ttr_pdf_rayleigh(t, spec);
  if (strategy.mode == SensingMode::Continuous) {
    auto integrand = [&](double ttr) -> double {
      if (ttr <= 0.0 || ttr >= t) return 0.0;
      const double f_ttr = ttr_pdf_rayleigh(ttr, spec);
      if (f_ttr == 0.0) return 0.0;
      return std::exp(-(t - ttr) / lambda) / lambda * f_ttr;
    };
    return pon * math::integrate(integrand, 0.0, t).value + immediate;
  }
  const double ts = strategy.ts;
  const double b = beta(params, ts);
  double waited = 0.0;
  double geo = 1.0 - b;  // (1-beta) beta^{n-1} for n = 1
  for (std::uint64_t n = 1; static_cast<double>(n) * ts < t; ++n) {
    waited += geo * ttr_pdf_rayleigh(t - static_cast<double>(n) * ts, spec);
    geo *= b;
  }
  return immediate + pon * waited;
}

double fixed_ttr_static_snr(double entropy_h, double bandwidth_w,
                            double snr_const) {
  if (!(entropy_h > 0.0) || !(bandwidth_w > 0.0))
    throw std::domain_error("fixed_ttr_static_snr: H and W must be positive");
  if (!(snr_const > 0.0))
    throw std::domain_error("fixed_ttr_static_snr: capacity is nonpositive");
  return entropy_h / (bandwidth_w * std::log2(1.0 + snr_const));
}

double fixed_ttr_ergodic(double entropy_h, double bandwidth_w,
                         const std::function<double(double)>& snr_density) {
  if (!(entropy_h > 0.0) || !(bandwidth_w > 0.0))
    throw std::domain_error("fixed_ttr_ergodic: H and W must be positive");
  const double mean_log_capacity =
      math::integrate_upper_auto(
          [&](double g) { return std::log2(1.0 + g) * snr_density(g); }, 0.0)
          .value;
  if (!(mean_log_capacity > 0.0))
    throw std::domain_error("fixed_ttr_ergodic: capacity is nonpositive");
  return entropy_h / (bandwidth_w * mean_log_capacity);
}

double fixed_ttr_ergodic_rayleigh(const RayleighTtrSpec& spec) {
  const double gbar = spec.mean_snr;
  return fixed_ttr_ergodic(spec.entropy_h, spec.bandwidth_w,
                           [gbar](double g) {
                             return std::exp(-g / gbar) / gbar;
                           });
}

}  // namespace edtq
