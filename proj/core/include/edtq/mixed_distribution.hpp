// Copyright (c) 2026 The edtq authors
// SPDX-License-Identifier: Apache-2.0

#ifndef EDTQ_MIXED_DISTRIBUTION_HPP
#define EDTQ_MIXED_DISTRIBUTION_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace edtq {

struct Atom {
  double location;
  double mass;
};

// A law with discrete atoms plus a continuous density, immutable after
// construction. Atoms are carried explicitly; there is no narrow-bump
// approximation of delta masses, so the simulator can detect them as
// repeated exact values.
class MixedDistribution {
 public:
  MixedDistribution(std::vector<Atom> atoms,
                    std::function<double(double)> density, double support_low);

  double density(double t) const;
  const std::vector<Atom>& atoms() const { return atoms_; }
  double support_low() const { return support_low_; }
  double atom_mass_total() const;

  // Normalization audit: sum of atom masses plus the quadrature of the
  // density over [support_low, inf). Within 1e-6 of 1 for every law this
  // library constructs.
  double total_mass(double abs_tol = 1e-8) const;

  double mean() const;
  double second_moment() const;

  // P[X <= t], atoms included as jumps.
  double cdf(double t) const;

  // Smallest t with cdf(t) >= p, by bisection over [support_low, hi].
  double quantile(double p) const;

 private:
  std::vector<Atom> atoms_;
  std::function<double(double)> density_;
  double support_low_;
};

// Discrete law of the delivery time under periodic sensing. The value
// n (>= 0) carries probability probs[n] of the delivery time being
// n*ts + ttr augmented by the fixed transmission time.
struct DiscreteEdtPmf {
  double ttr = 0.0;
  double ts = 0.0;
  std::vector<double> probs;

  double location(std::size_t n) const { return static_cast<double>(n) * ts + ttr; }
  double total() const;
  double mean() const;
  double second_moment() const;
};

}  // namespace edtq

#endif  // EDTQ_MIXED_DISTRIBUTION_HPP
