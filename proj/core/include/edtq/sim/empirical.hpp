// Copyright (c) 2026 The edtq authors
// SPDX-License-Identifier: Apache-2.0

#ifndef EDTQ_SIM_EMPIRICAL_HPP
#define EDTQ_SIM_EMPIRICAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace edtq::sim {

// Empirical law assembled from raw samples: detected atoms (values hit at
// least twice bit-identically; continuous laws produce ties with
// probability zero) plus a uniform histogram of the remaining samples.
// The final histogram slot is an overflow bin covering [top_edge, inf) so
// that heavy-tailed laws keep full counts: sum of bin counts plus atom
// counts always equals n.
struct EmpiricalDistribution {
  std::map<double, std::uint64_t> atom_candidates;
  double bin_low = 0.0;
  double bin_width = 1.0;
  std::vector<std::uint64_t> bin_counts;  // size nbins + 1; last is overflow
  std::uint64_t n = 0;
  // running raw moments over all samples (m3/m4 feed the standard error of
  // the second-moment estimate)
  double mean = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;

  // Bins cover [bin_low, bin_low + nbins * bin_width) with the 99.9th
  // percentile of the non-atom samples as top edge; support_low pins the
  // left edge when the law's support is known.
  static EmpiricalDistribution from_samples(const std::vector<double>& samples,
                                            int nbins,
                                            std::optional<double> support_low);

  std::uint64_t atom_count_total() const;
  double edge(std::size_t i) const { return bin_low + static_cast<double>(i) * bin_width; }
  std::size_t interior_bins() const {
    return bin_counts.empty() ? 0 : bin_counts.size() - 1;
  }
};

}  // namespace edtq::sim

#endif  // EDTQ_SIM_EMPIRICAL_HPP
