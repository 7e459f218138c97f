// Error types for precondition violations and detected numerical failure.
#pragma once

#include <stdexcept>
#include <string>

namespace qcflow {

// Invalid input data or out-of-domain argument (caller bug or bad config).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An iterative solver failed to converge.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Boundary derivative collapsed below the cusp threshold.
struct CuspError : std::runtime_error {
  double theta_star;  // angle of minimal |f'|
  double min_df;
  CuspError(const std::string& what, double theta, double m)
      : std::runtime_error(what), theta_star(theta), min_df(m) {}
};

// A function required to have positive real part failed the sampled check.
struct PositivityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qcflow
