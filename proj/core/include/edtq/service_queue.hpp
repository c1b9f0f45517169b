// Copyright (c) 2026 The edtq authors
// SPDX-License-Identifier: Apache-2.0

#ifndef EDTQ_SERVICE_QUEUE_HPP
#define EDTQ_SERVICE_QUEUE_HPP

#include "edtq/channel.hpp"

namespace edtq {

// First and second raw moments of a service time.
struct MomentPair {
  double m1 = 0.0;  // mean
  double m2 = 0.0;  // second raw moment; m2 >= m1^2 for any proper law
};

// Mean-value solution of the two-type M/G/1 queue. Type 1 packets arrive
// to a nonempty system and always start service with the PU idle; Type 2
// packets arrive to an empty system and see the PU in a state correlated
// with the elapsed idle time.
struct QueueSolution {
  double p0;     // probability the system is empty
  double e_st;   // mean service time over all packets
  double e_st2;  // second moment of service time
  double e_q;    // mean wait in queue
  double e_nq;   // mean number waiting (excludes the packet in service)
  double e_d;    // mean total delay, e_st + e_q
  double e_r;    // mean residual service time seen by an arrival
};

// Delivery-time moments conditioned on the PU state at the instant the
// packet becomes head of line. Continuous sensing closed forms:
//   busy:  m1 = ttr + lambda (1 + ttr/mu)
//   idle:  m1 = ttr + lambda ttr / mu
// with matching second moments.
MomentPair moments_pon_continuous(double ttr, const ChannelParams& params);
MomentPair moments_poff_continuous(double ttr, const ChannelParams& params);

// Periodic-sensing counterparts, expressed through the slot-count moments
// E[n] = (1 + ttr/mu) / (1-beta) and its second moment.
MomentPair moments_pon_periodic(double ttr, const ChannelParams& params,
                                double ts, BetaModel model = BetaModel::Exact);
MomentPair moments_poff_periodic(double ttr, const ChannelParams& params,
                                 double ts, BetaModel model = BetaModel::Exact);

// Probability that a packet arriving to an empty queue finds the PU busy,
//   lambda psi / (lambda psi + lambda mu + mu psi),
// where psi is the mean interarrival time.
double p_on_type2(const ChannelParams& params, double psi);

// Type 2 moments: mixture of busy/idle moments weighted by pon2.
MomentPair type2_moments(double pon2, const MomentPair& mom_on,
                         const MomentPair& mom_off);

// Mean-value M/G/1 solution with distinct Type 1 / Type 2 service laws.
// Requires psi > type1.m1 (with a small relative margin); otherwise the
// closed forms are singular and instability_error names the bound.
QueueSolution mg1_solve(double psi, const MomentPair& type1,
                        const MomentPair& type2);

// The single-class baseline that ignores the type structure: plugs the
// overall moments into E[D] = E[ST] + E[ST^2] / (2 (psi - E[ST])). Kept as
// the comparison target the two-type solution is measured against.
double mg1_conventional(double psi, const MomentPair& overall);

}  // namespace edtq

#endif  // EDTQ_SERVICE_QUEUE_HPP
