// Copyright (c) 2026 The edtq authors
// SPDX-License-Identifier: Apache-2.0

#include "edtq/sim/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <future>
#include <stdexcept>
#include <vector>

#include "edtq/errors.hpp"
#include "edtq/sim/rng.hpp"

namespace edtq::sim {

namespace {

// Exact alternating-exponential PU trajectory, advanced lazily. Durations
// are drawn only when the clock crosses a toggle, so RNG consumption is
// deterministic for a given event sequence.
class Trajectory {
 public:
  Trajectory(Xoshiro256pp& rng, const ChannelParams& ch, bool on_at_zero)
      : rng_(rng), ch_(ch), on_(on_at_zero) {
    next_toggle_ = draw_sojourn();
  }

  void advance_to(double t, std::uint64_t& events, std::uint64_t budget) {
    while (next_toggle_ <= t) {
      on_ = !on_;
      next_toggle_ += draw_sojourn();
      if (++events > budget)
        throw simulation_error("simulate: event budget exhausted");
    }
  }

  bool on() const { return on_; }
  double next_toggle() const { return next_toggle_; }

 private:
  double draw_sojourn() {
    return rng_.exponential(on_ ? ch_.lambda : ch_.mu);
  }
  Xoshiro256pp& rng_;
  ChannelParams ch_;
  bool on_;
  double next_toggle_;
};

bool draw_initial_on(Xoshiro256pp& rng, const SimConfig& cfg) {
  switch (cfg.initial_state) {
    case InitialPuState::ForceOn:
      return true;
    case InitialPuState::ForceOff:
      return false;
    case InitialPuState::Stationary:
    default:
      return rng.bernoulli(stationary_on_prob(cfg.channel));
  }
}

double draw_ttr(Xoshiro256pp& rng, const TtrModel& model) {
  if (model.kind == TtrModel::Kind::Fixed) return model.fixed_ttr;
  const RayleighTtrSpec& spec = *model.rayleigh;
  const double snr = rng.exponential(spec.mean_snr);
  return spec.entropy_h / (spec.bandwidth_w * std::log2(1.0 + snr));
}

// One-shot packets wait for at most one waiting slot and then transmit in
// full. Returns the delivery time.
double sample_one_shot(Xoshiro256pp& rng, const SimConfig& cfg, double ttr,
                       bool pu_on) {
  if (!pu_on) return ttr;
  if (cfg.sensing.mode == SensingMode::Continuous)
    return rng.exponential(cfg.channel.lambda) + ttr;
  // periodic: walk the true trajectory to the first idle sensing instant
  Trajectory traj(rng, cfg.channel, true);
  std::uint64_t events = 0;
  for (std::uint64_t k = 1;; ++k) {
    const double t = static_cast<double>(k) * cfg.sensing.ts;
    traj.advance_to(t, events, cfg.event_budget_per_sample);
    if (++events > cfg.event_budget_per_sample)
      throw simulation_error("simulate: event budget exhausted");
    if (!traj.on())
      return static_cast<double>(k) * cfg.sensing.ts + ttr;
  }
}

// Work-preserving delivery of one packet whose service starts at local
// time zero with the given PU state. Periodic waits are multiples of ts by
// construction, so the returned value is bit-exactly ttr + n*ts when every
// waiting slot is slot-aligned (fixed ttr case).
double sample_edt_work_preserving(Xoshiro256pp& rng, const SimConfig& cfg,
                                  double ttr, bool pu_on_at_start) {
  const std::uint64_t budget = cfg.event_budget_per_sample;
  std::uint64_t events = 0;
  Trajectory traj(rng, cfg.channel, pu_on_at_start);
  double clock = 0.0;        // local service clock
  double remaining = ttr;    // untransmitted workload
  double waited_cont = 0.0;  // continuous-sensing wait total
  std::uint64_t waited_slots = 0;  // periodic-sensing sensing periods

  const bool periodic = cfg.sensing.mode == SensingMode::Periodic;
  bool transmitting = !pu_on_at_start;

  while (true) {
    if (transmitting) {
      // PU idle now; next interruption at the trajectory's on-toggle
      const double idle_until = traj.next_toggle();
      if (clock + remaining <= idle_until) break;  // finishes this slot
      remaining -= idle_until - clock;
      clock = idle_until;
      traj.advance_to(clock, events, budget);  // processes the on-toggle
      transmitting = false;
    } else if (!periodic) {
      // continuous sensing: transmission resumes at the off-toggle
      const double busy_until = traj.next_toggle();
      waited_cont += busy_until - clock;
      clock = busy_until;
      traj.advance_to(clock, events, budget);
      transmitting = true;
    } else {
      // periodic sensing: probe the true trajectory every ts from the
      // instant the SU entered the waiting state
      const double wait_start = clock;
      for (std::uint64_t k = 1;; ++k) {
        const double probe = wait_start + static_cast<double>(k) * cfg.sensing.ts;
        traj.advance_to(probe, events, budget);
        if (++events > budget)
          throw simulation_error("simulate: event budget exhausted");
        if (!traj.on()) {
          waited_slots += k;
          clock = probe;
          transmitting = true;
          break;
        }
      }
    }
  }
  if (periodic)
    return ttr + static_cast<double>(waited_slots) * cfg.sensing.ts;
  return ttr + waited_cont;
}

double sample_edt(Xoshiro256pp& rng, const SimConfig& cfg) {
  const bool pu_on = draw_initial_on(rng, cfg);
  const double ttr = draw_ttr(rng, cfg.ttr);
  if (cfg.ttr.kind == TtrModel::Kind::OneShotRayleigh)
    return sample_one_shot(rng, cfg, ttr, pu_on);
  return sample_edt_work_preserving(rng, cfg, ttr, pu_on);
}

std::vector<double> run_replica(const SimConfig& cfg, unsigned replica,
                                std::uint64_t count) {
  Xoshiro256pp rng(cfg.seed);
  for (unsigned r = 0; r < replica; ++r) rng.jump();
  std::vector<double> values;
  values.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) values.push_back(sample_edt(rng, cfg));
  return values;
}

}  // namespace

TtrModel TtrModel::fixed(double ttr) {
  if (!(ttr > 0.0)) throw std::domain_error("TtrModel: ttr must be positive");
  TtrModel m;
  m.kind = Kind::Fixed;
  m.fixed_ttr = ttr;
  return m;
}

TtrModel TtrModel::random(const RayleighTtrSpec& spec) {
  TtrModel m;
  m.kind = Kind::Rayleigh;
  m.rayleigh = spec;
  return m;
}

TtrModel TtrModel::one_shot(const RayleighTtrSpec& spec) {
  TtrModel m;
  m.kind = Kind::OneShotRayleigh;
  m.rayleigh = spec;
  return m;
}

std::vector<double> sample_edt_values(const SimConfig& cfg) {
  if (cfg.n_samples == 0)
    throw std::domain_error("simulate: n_samples must be >= 1");
  if (cfg.replicas == 0)
    throw std::domain_error("simulate: replicas must be >= 1");
  const std::uint64_t base = cfg.n_samples / cfg.replicas;
  const std::uint64_t extra = cfg.n_samples % cfg.replicas;

  std::vector<std::future<std::vector<double>>> futures;
  futures.reserve(cfg.replicas);
  for (unsigned r = 0; r < cfg.replicas; ++r) {
    const std::uint64_t count = base + (r < extra ? 1 : 0);
    futures.push_back(std::async(std::launch::async, run_replica, cfg, r, count));
  }
  std::vector<double> all;
  all.reserve(cfg.n_samples);
  for (auto& f : futures) {
    std::vector<double> part = f.get();
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

EmpiricalDistribution simulate_edt_single(const SimConfig& cfg) {
  const std::vector<double> values = sample_edt_values(cfg);
  std::optional<double> support;
  if (cfg.ttr.kind == TtrModel::Kind::Fixed)
    support = cfg.ttr.fixed_ttr;
  else
    support = 0.0;
  return EmpiricalDistribution::from_samples(values, cfg.histogram_bins,
                                             support);
}

std::uint64_t default_warmup(std::uint64_t n_packets) {
  return std::max<std::uint64_t>(10'000, n_packets / 100);
}

QueueSimResult simulate_queue(const SimConfig& cfg, double psi,
                              std::uint64_t n_packets, std::uint64_t warmup) {
  if (!(psi > 0.0)) throw std::domain_error("simulate_queue: psi must be positive");
  if (n_packets == 0)
    throw std::domain_error("simulate_queue: n_packets must be >= 1");
  if (cfg.ttr.kind != TtrModel::Kind::Fixed)
    throw std::domain_error(
        "simulate_queue: queue analysis assumes a fixed transmission time");
  if (warmup >= n_packets) warmup = n_packets / 2;

  const std::uint64_t budget = cfg.event_budget_per_sample;
  Xoshiro256pp rng(cfg.seed);
  std::uint64_t events = 0;
  Trajectory traj(rng, cfg.channel, rng.bernoulli(stationary_on_prob(cfg.channel)));

  const bool periodic = cfg.sensing.mode == SensingMode::Periodic;
  const double ttr = cfg.ttr.fixed_ttr;

  double arrival = 0.0;
  double prev_departure = 0.0;

  QueueSimResult res;
  double sum_delay = 0.0, sum_qdelay = 0.0, sum_nq = 0.0;
  double sum_t1 = 0.0, sum_t1_sq = 0.0, sum_t2 = 0.0, sum_t2_sq = 0.0;
  std::uint64_t n_t1 = 0, n_t2 = 0;
  double busy_time = 0.0, empty_time = 0.0;
  double stats_t0 = 0.0;
  std::uint64_t counted = 0;

  // batch means for standard errors
  constexpr std::uint64_t kBatches = 32;
  const std::uint64_t batch_size =
      std::max<std::uint64_t>(1, (n_packets - warmup) / kBatches);
  std::vector<double> batch_delay_sums, batch_nq_sums;
  std::vector<std::uint64_t> batch_counts;
  double cur_delay_sum = 0.0, cur_nq_sum = 0.0;
  std::uint64_t cur_count = 0;

  std::deque<double> pending_starts;  // service starts of in-flight packets

  for (std::uint64_t i = 0; i < n_packets; ++i) {
    arrival += rng.exponential(psi);
    const bool type1 = arrival < prev_departure;

    while (!pending_starts.empty() && pending_starts.front() <= arrival)
      pending_starts.pop_front();
    const std::uint64_t nq_seen = pending_starts.size();

    const double start = type1 ? prev_departure : arrival;
    if (!type1) {
      traj.advance_to(start, events, budget);
      if (i >= warmup) empty_time += arrival - std::max(prev_departure, stats_t0);
    } else {
      // service begins the instant the previous packet departs; that
      // departure happened mid-transmission slot, so the PU must be idle
      if (traj.on())
        throw simulation_error(
            "simulate_queue: Type 1 service started with PU busy");
      ++res.type1_pu_off_checks;
    }

    // serve the packet from `start` along the shared trajectory
    double clock = start;
    double remaining = ttr;
    bool transmitting = !traj.on();
    while (true) {
      if (transmitting) {
        const double idle_until = traj.next_toggle();
        if (clock + remaining <= idle_until) {
          clock += remaining;
          break;
        }
        remaining -= idle_until - clock;
        clock = idle_until;
        traj.advance_to(clock, events, budget);
        transmitting = false;
      } else if (!periodic) {
        const double busy_until = traj.next_toggle();
        clock = busy_until;
        traj.advance_to(clock, events, budget);
        transmitting = true;
      } else {
        const double wait_start = clock;
        for (std::uint64_t k = 1;; ++k) {
          const double probe =
              wait_start + static_cast<double>(k) * cfg.sensing.ts;
          traj.advance_to(probe, events, budget);
          if (++events > budget)
            throw simulation_error("simulate_queue: event budget exhausted");
          if (!traj.on()) {
            clock = probe;
            transmitting = true;
            break;
          }
        }
      }
    }
    const double dep = clock;
    const double service = dep - start;
    prev_departure = dep;
    pending_starts.push_back(start);

    if (i == warmup) stats_t0 = arrival;
    if (i >= warmup) {
      const double delay = dep - arrival;
      const double qdelay = start - arrival;
      sum_delay += delay;
      sum_qdelay += qdelay;
      sum_nq += static_cast<double>(nq_seen);
      busy_time += service;
      ++counted;
      if (type1) {
        sum_t1 += service;
        sum_t1_sq += service * service;
        ++n_t1;
      } else {
        sum_t2 += service;
        sum_t2_sq += service * service;
        ++n_t2;
      }
      cur_delay_sum += delay;
      cur_nq_sum += static_cast<double>(nq_seen);
      if (++cur_count == batch_size) {
        batch_delay_sums.push_back(cur_delay_sum);
        batch_nq_sums.push_back(cur_nq_sum);
        batch_counts.push_back(cur_count);
        cur_delay_sum = cur_nq_sum = 0.0;
        cur_count = 0;
      }
    }
  }

  res.n_counted = counted;
  if (counted == 0) return res;
  const double horizon = prev_departure - stats_t0;
  res.mean_delay = sum_delay / static_cast<double>(counted);
  res.mean_queue_delay = sum_qdelay / static_cast<double>(counted);
  res.mean_queue_len = sum_nq / static_cast<double>(counted);
  res.type1_fraction = static_cast<double>(n_t1) / static_cast<double>(counted);
  res.utilization = horizon > 0.0 ? busy_time / horizon : 1.0;
  res.p0_empirical = horizon > 0.0 ? empty_time / horizon : 0.0;
  res.unstable_flag = res.utilization > 0.999;
  if (n_t1 > 0) {
    res.type1_service.m1 = sum_t1 / static_cast<double>(n_t1);
    res.type1_service.m2 = sum_t1_sq / static_cast<double>(n_t1);
    const double var1 =
        std::max(0.0, res.type1_service.m2 -
                          res.type1_service.m1 * res.type1_service.m1);
    res.se_type1_m1 = std::sqrt(var1 / static_cast<double>(n_t1));
  }
  if (n_t2 > 0) {
    res.type2_service.m1 = sum_t2 / static_cast<double>(n_t2);
    res.type2_service.m2 = sum_t2_sq / static_cast<double>(n_t2);
    const double var2 =
        std::max(0.0, res.type2_service.m2 -
                          res.type2_service.m1 * res.type2_service.m1);
    res.se_type2_m1 = std::sqrt(var2 / static_cast<double>(n_t2));
  }
  // batch-means standard errors (delays are heavily autocorrelated)
  auto batch_se = [&](const std::vector<double>& sums, double overall_mean) {
    if (sums.size() < 2) return 0.0;
    double acc = 0.0;
    for (std::size_t b = 0; b < sums.size(); ++b) {
      const double bm = sums[b] / static_cast<double>(batch_counts[b]);
      acc += (bm - overall_mean) * (bm - overall_mean);
    }
    const double var_bm = acc / static_cast<double>(sums.size() - 1);
    return std::sqrt(var_bm / static_cast<double>(sums.size()));
  };
  res.se_delay = batch_se(batch_delay_sums, res.mean_delay);
  res.se_queue_len = batch_se(batch_nq_sums, res.mean_queue_len);
  return res;
}

}  // namespace edtq::sim
