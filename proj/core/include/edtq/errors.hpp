// Copyright (c) 2026 The edtq authors
// SPDX-License-Identifier: Apache-2.0

#ifndef EDTQ_ERRORS_HPP
#define EDTQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace edtq {

// Thrown when an iterative scheme exhausts its term or evaluation budget
// before reaching the requested accuracy. Never silently truncated.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the queue solver when the arrival spacing violates the
// stability bound psi > E[ST_Type1].
class instability_error : public std::domain_error {
 public:
  instability_error(const std::string& what, double bound)
      : std::domain_error(what), bound_(bound) {}
  double bound() const noexcept { return bound_; }

 private:
  double bound_;
};

// Thrown by the simulator when a single sample exceeds its event budget.
class simulation_error : public std::runtime_error {
 public:
  explicit simulation_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace edtq

#endif  // EDTQ_ERRORS_HPP
