// Copyright (c) 2026 The edtq authors
// SPDX-License-Identifier: Apache-2.0

#ifndef EDTQ_LOG_SCALED_HPP
#define EDTQ_LOG_SCALED_HPP

#include <cmath>
#include <limits>

namespace edtq {

// A real number stored as (sign, log|x|) so that products of exponentially
// large and exponentially small factors can be combined without overflow.
// The waiting-time densities multiply e^{-t/lambda} by a Bessel term whose
// naive value exceeds 1e308 for moderate arguments; all such products are
// assembled through this type and exponentiated only once at the end.
struct LogScaledValue {
  double log_magnitude = -std::numeric_limits<double>::infinity();
  int sign = 0;  // 0 iff the represented value is exactly zero

  static LogScaledValue zero() { return {}; }

  static LogScaledValue from_value(double v) {
    if (v == 0.0) return zero();
    return {std::log(std::abs(v)), v > 0.0 ? +1 : -1};
  }

  // The value sign * exp(log_mag); sign must be +-1.
  static LogScaledValue from_log(double log_mag, int sgn = +1) {
    return {log_mag, sgn};
  }

  LogScaledValue operator*(const LogScaledValue& o) const {
    if (sign == 0 || o.sign == 0) return zero();
    return {log_magnitude + o.log_magnitude, sign * o.sign};
  }

  LogScaledValue operator/(const LogScaledValue& o) const {
    return {log_magnitude - o.log_magnitude, sign * o.sign};
  }

  // Multiply by exp(delta) without leaving the log domain.
  LogScaledValue scaled_by_exp(double delta) const {
    if (sign == 0) return zero();
    return {log_magnitude + delta, sign};
  }

  // Final combination; may round to 0 or +-inf if the result genuinely
  // under- or overflows double range.
  double value() const {
    if (sign == 0) return 0.0;
    return sign * std::exp(log_magnitude);
  }
};

}  // namespace edtq

#endif  // EDTQ_LOG_SCALED_HPP
