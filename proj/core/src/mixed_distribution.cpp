// Copyright (c) 2026 The edtq authors
// SPDX-License-Identifier: Apache-2.0

#include "edtq/mixed_distribution.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "edtq/quadrature.hpp"

namespace edtq {

MixedDistribution::MixedDistribution(std::vector<Atom> atoms,
                                     std::function<double(double)> density,
                                     double support_low)
    : atoms_(std::move(atoms)),
      density_(std::move(density)),
      support_low_(support_low) {
  for (const Atom& a : atoms_) {
    if (!(a.mass > 0.0) || a.mass > 1.0)
      throw std::domain_error("MixedDistribution: atom mass must lie in (0, 1]");
  }
}

double MixedDistribution::density(double t) const {
  if (t < support_low_) return 0.0;
  return density_(t);
}

double MixedDistribution::atom_mass_total() const {
  double s = 0.0;
  for (const Atom& a : atoms_) s += a.mass;
  return s;
}

double MixedDistribution::total_mass(double abs_tol) const {
  const auto r = math::integrate_upper_auto(
      [this](double t) { return density(t); }, support_low_, abs_tol);
  return atom_mass_total() + r.value;
}

double MixedDistribution::mean() const {
  double s = 0.0;
  for (const Atom& a : atoms_) s += a.location * a.mass;
  const auto r = math::integrate_upper_auto(
      [this](double t) { return t * density(t); }, support_low_);
  return s + r.value;
}

double MixedDistribution::second_moment() const {
  double s = 0.0;
  for (const Atom& a : atoms_) s += a.location * a.location * a.mass;
  const auto r = math::integrate_upper_auto(
      [this](double t) { return t * t * density(t); }, support_low_);
  return s + r.value;
}

double MixedDistribution::cdf(double t) const {
  double s = 0.0;
  for (const Atom& a : atoms_)
    if (a.location <= t) s += a.mass;
  if (t > support_low_)
    s += math::integrate([this](double x) { return density(x); }, support_low_, t)
             .value;
  return s;
}

double MixedDistribution::quantile(double p) const {
  if (!(p >= 0.0 && p < 1.0))
    throw std::domain_error("quantile: p must lie in [0, 1)");
  double lo = support_low_;
  if (cdf(lo) >= p) return lo;
  double hi = math::envelope_cutoff([this](double t) { return density(t); },
                                    support_low_);
  for (int i = 0; i < 200 && cdf(hi) < p; ++i) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (cdf(mid) < p)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double DiscreteEdtPmf::total() const {
  double s = 0.0;
  for (double p : probs) s += p;
  return s;
}

double DiscreteEdtPmf::mean() const {
  double s = 0.0;
  for (std::size_t n = 0; n < probs.size(); ++n) s += location(n) * probs[n];
  return s;
}

double DiscreteEdtPmf::second_moment() const {
  double s = 0.0;
  for (std::size_t n = 0; n < probs.size(); ++n)
    s += location(n) * location(n) * probs[n];
  return s;
}

}  // namespace edtq
