// Copyright (c) 2026 The edtq authors
// SPDX-License-Identifier: Apache-2.0

#ifndef EDTQ_SIM_SIMULATE_HPP
#define EDTQ_SIM_SIMULATE_HPP

#include <cstdint>
#include <optional>

#include "edtq/channel.hpp"
#include "edtq/edt_dist.hpp"
#include "edtq/service_queue.hpp"
#include "edtq/sim/empirical.hpp"

namespace edtq::sim {

// Transmission-time model for a simulated packet.
struct TtrModel {
  enum class Kind { Fixed, Rayleigh, OneShotRayleigh } kind = Kind::Fixed;
  double fixed_ttr = 0.0;
  std::optional<RayleighTtrSpec> rayleigh;

  static TtrModel fixed(double ttr);
  static TtrModel random(const RayleighTtrSpec& spec);
  // Packet always completes within a single transmission slot; waits for
  // at most one waiting slot.
  static TtrModel one_shot(const RayleighTtrSpec& spec);
};

enum class InitialPuState { Stationary, ForceOn, ForceOff };

struct SimConfig {
  ChannelParams channel;
  SensingStrategy sensing;
  TtrModel ttr;
  std::uint64_t n_samples = 1'000'000;
  std::uint64_t seed = 1;
  unsigned replicas = 1;
  // Trajectory toggles plus sensing checks per sample; exceeding it raises
  // simulation_error rather than spinning.
  std::uint64_t event_budget_per_sample = 1'000'000'000;
  int histogram_bins = 400;
  // For per-state moment validation the PU state at arrival can be pinned
  // instead of drawn from the stationary law.
  InitialPuState initial_state = InitialPuState::Stationary;
};

// Samples the delivery time of independent single packets against exact
// alternating-exponential PU trajectories. The simulator never touches
// beta or any closed form: periodic sensing checks the true trajectory at
// the sensing instants, which start one period after the SU enters a
// waiting state (at that instant it knows the PU is busy, whether by
// arrival-while-busy or by interruption). A packet arriving while the PU
// is idle starts transmitting immediately under either sensing mode.
// Replicas run on disjoint RNG substreams and are merged in replica order.
EmpiricalDistribution simulate_edt_single(const SimConfig& cfg);

// Raw samples from one replica, exposed for moment-level validation.
std::vector<double> sample_edt_values(const SimConfig& cfg);

struct QueueSimResult {
  double mean_delay = 0.0;        // arrival to departure
  double se_delay = 0.0;          // batch-means standard error
  double mean_queue_delay = 0.0;  // arrival to service start
  double mean_queue_len = 0.0;    // waiting packets seen by an arrival
  double se_queue_len = 0.0;
  double p0_empirical = 0.0;      // time-average empty-system probability
  double type1_fraction = 0.0;    // arrivals that found the system busy
  MomentPair type1_service;
  MomentPair type2_service;
  double se_type1_m1 = 0.0;
  double se_type2_m1 = 0.0;
  std::uint64_t n_counted = 0;
  // every Type 1 service start is asserted to see an idle PU; this counts
  // how many times that structural claim was exercised
  std::uint64_t type1_pu_off_checks = 0;
  double utilization = 0.0;
  bool unstable_flag = false;
};

std::uint64_t default_warmup(std::uint64_t n_packets);

// FIFO queue with Poisson arrivals of mean spacing psi over one continuous
// PU trajectory. Service of the head packet is the same work-preserving
// delivery process as simulate_edt_single, started at the head-of-line
// instant with the true trajectory state. Only fixed transmission times
// are meaningful here. Statistics exclude the first `warmup` packets.
QueueSimResult simulate_queue(const SimConfig& cfg, double psi,
                              std::uint64_t n_packets, std::uint64_t warmup);

}  // namespace edtq::sim

#endif  // EDTQ_SIM_SIMULATE_HPP
