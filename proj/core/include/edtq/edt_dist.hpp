// Copyright (c) 2026 The edtq authors
// SPDX-License-Identifier: Apache-2.0

#ifndef EDTQ_EDT_DIST_HPP
#define EDTQ_EDT_DIST_HPP

#include <cstdint>
#include <functional>

#include "edtq/channel.hpp"
#include "edtq/mixed_distribution.hpp"

namespace edtq {

// Transmission-time model for a slow Rayleigh-fading secondary link:
// ttr = entropy_h / (bandwidth_w * log2(1 + snr)) with snr exponential of
// mean mean_snr (linear scale; dB conversion is a CLI concern).
struct RayleighTtrSpec {
  double entropy_h;
  double bandwidth_w;
  double mean_snr;

  RayleighTtrSpec(double h, double w, double snr);
};

// Probability that the packet needs exactly k transmission slots,
//   (ttr/mu)^{k-1} e^{-ttr/mu} / (k-1)!,
// a Poisson(ttr/mu) mass at k-1. Independent of the sensing strategy.
double prob_k_slots(unsigned k, double ttr, double mu);

// Total-waiting-time density under continuous sensing when the PU is busy
// at packet arrival:
//   (1/lambda) e^{-ttr/mu} I0(2 sqrt(ttr t / (mu lambda))) e^{-t/lambda}.
// Evaluated through the scaled Bessel function in the log domain; never
// overflows.
double waiting_pdf_pon(double t, double ttr, const ChannelParams& params);

// Total-waiting-time law under continuous sensing when the PU is idle at
// packet arrival: an atom at zero of mass e^{-ttr/mu} (transmission fits
// in the first idle period) plus an I1 density for t > 0.
MixedDistribution waiting_dist_poff(double ttr, const ChannelParams& params);

// Delivery-time law under continuous sensing for a fixed transmission
// time: atom of mass mu/(lambda+mu) e^{-ttr/mu} at ttr, plus the Bessel
// density supported on t > ttr.
MixedDistribution edt_pdf_continuous(double ttr, const ChannelParams& params);

// Periodic sensing: probability that the waiting time equals n*ts when
// the PU is busy at arrival (zero for n = 0).
double waiting_pmf_pon_periodic(std::uint64_t n, double ttr,
                                const ChannelParams& params, double ts,
                                BetaModel model = BetaModel::Exact);

// Periodic sensing, PU idle at arrival; n = 0 carries mass e^{-ttr/mu}.
double waiting_pmf_poff_periodic(std::uint64_t n, double ttr,
                                 const ChannelParams& params, double ts,
                                 BetaModel model = BetaModel::Exact);

// Stationary mixture of the two periodic waiting laws; probs[n] is the
// probability the delivery time equals n*ts + ttr. Truncated where the
// geometric tail bound beta^N / (1-beta) falls below 1e-12 and the
// accumulated mass is within 1e-12 of one.
DiscreteEdtPmf edt_pmf_periodic(double ttr, const ChannelParams& params,
                                double ts, BetaModel model = BetaModel::Exact);

// Density of the random transmission time over the Rayleigh link, via the
// change of variables gamma(t) = 2^{h/(w t)} - 1 applied to the
// exponential SNR density. This is the authoritative form; see
// ttr_pdf_rayleigh_as_printed for the variant some texts print.
double ttr_pdf_rayleigh(double t, const RayleighTtrSpec& spec);

// The nats-based variant (w absorbed, natural instead of base-2
// exponentiation). Kept only so validation reports can quantify how far it
// sits from the change-of-variables form; not used by any law.
double ttr_pdf_rayleigh_as_printed(double t, const RayleighTtrSpec& spec);

// Delivery-time density with random transmission time, continuous sensing:
// the conditional fixed-ttr law integrated against ttr_pdf_rayleigh. The
// conditional atom at ttr = t enters analytically, not through quadrature.
double edt_pdf_random_ttr_continuous(double t, const RayleighTtrSpec& spec,
                                     const ChannelParams& params);

// Same under periodic sensing: sum over waiting-slot counts n of the
// conditional mass at ttr = t - n*ts times the transmission-time density.
double edt_pdf_random_ttr_periodic(double t, const RayleighTtrSpec& spec,
                                   const ChannelParams& params, double ts);

// Very short packets that always finish within one idle period: at most a
// single waiting slot precedes the transmission.
double edt_pdf_oneshot(double t, const RayleighTtrSpec& spec,
                       const ChannelParams& params,
                       const SensingStrategy& strategy);

// Fixed transmission time from link capacity.
double fixed_ttr_static_snr(double entropy_h, double bandwidth_w,
                            double snr_const);
// Ergodic-capacity version; the expectation of log2(1+snr) is taken by
// quadrature against the supplied SNR density on [0, inf).
double fixed_ttr_ergodic(double entropy_h, double bandwidth_w,
                         const std::function<double(double)>& snr_density);
double fixed_ttr_ergodic_rayleigh(const RayleighTtrSpec& spec);

}  // namespace edtq

#endif  // EDTQ_EDT_DIST_HPP
