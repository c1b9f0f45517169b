// Copyright (c) 2026 The edtq authors
// SPDX-License-Identifier: Apache-2.0

#include "edtq/sim/empirical.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace edtq::sim {

EmpiricalDistribution EmpiricalDistribution::from_samples(
    const std::vector<double>& samples, int nbins,
    std::optional<double> support_low) {
  if (samples.empty())
    throw std::domain_error("EmpiricalDistribution: no samples");
  if (nbins < 1) throw std::domain_error("EmpiricalDistribution: nbins < 1");

  EmpiricalDistribution d;
  d.n = samples.size();

  std::unordered_map<std::uint64_t, std::uint64_t> exact_counts;
  exact_counts.reserve(samples.size());
  double s1 = 0.0, s2 = 0.0, s3 = 0.0, s4 = 0.0;
  for (double x : samples) {
    if (!std::isfinite(x))
      throw std::domain_error("EmpiricalDistribution: non-finite sample");
    ++exact_counts[std::bit_cast<std::uint64_t>(x)];
    const double x2 = x * x;
    s1 += x;
    s2 += x2;
    s3 += x2 * x;
    s4 += x2 * x2;
  }
  const double inv_n = 1.0 / static_cast<double>(d.n);
  d.mean = s1 * inv_n;
  d.m2 = s2 * inv_n;
  d.m3 = s3 * inv_n;
  d.m4 = s4 * inv_n;

  for (const auto& [bits, count] : exact_counts) {
    if (count >= 2) d.atom_candidates[std::bit_cast<double>(bits)] = count;
  }

  std::vector<double> cont;
  cont.reserve(samples.size());
  for (double x : samples) {
    auto it = d.atom_candidates.find(x);
    if (it == d.atom_candidates.end()) cont.push_back(x);
  }

  const double lo = support_low.value_or(
      cont.empty() ? (d.atom_candidates.begin()->first)
                   : *std::min_element(cont.begin(), cont.end()));
  d.bin_low = lo;
  d.bin_counts.assign(static_cast<std::size_t>(nbins) + 1, 0);

  if (cont.empty()) {
    d.bin_width = 1.0;  // purely discrete law; bins stay empty
    return d;
  }

  // top edge at the 99.9th percentile keeps heavy tails from flattening
  // the binning; overflow bin catches the rest
  std::vector<double> q(cont);
  const std::size_t qi =
      static_cast<std::size_t>(0.999 * static_cast<double>(q.size() - 1));
  std::nth_element(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(qi), q.end());
  double top = q[qi];
  if (!(top > lo)) top = *std::max_element(cont.begin(), cont.end());
  if (!(top > lo)) top = lo + 1.0;
  d.bin_width = (top - lo) / static_cast<double>(nbins);

  for (double x : cont) {
    const double offset = (x - lo) / d.bin_width;
    std::size_t idx = offset < 0.0 ? 0
                                   : static_cast<std::size_t>(offset);
    if (idx >= static_cast<std::size_t>(nbins))
      idx = static_cast<std::size_t>(nbins);  // overflow slot
    ++d.bin_counts[idx];
  }
  return d;
}

std::uint64_t EmpiricalDistribution::atom_count_total() const {
  std::uint64_t s = 0;
  for (const auto& [loc, count] : atom_candidates) s += count;
  return s;
}

}  // namespace edtq::sim
