#pragma once

#include <stdexcept>
#include <string>

namespace eqchirp {

// Invalid value in the parameter domain (amplitudes, frequencies, chirp
// rate, noise model coefficients).
class ParameterDomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The regression design lost full column rank, typically because two
// components collapsed onto the same frequency. Carries the offending
// column pair (0-based indices into the design matrix).
class DegenerateDesignError : public std::runtime_error {
 public:
  DegenerateDesignError(std::string message, int column_i, int column_j)
      : std::runtime_error(std::move(message)),
        column_i(column_i),
        column_j(column_j) {}

  int column_i;
  int column_j;
};

// The objective is not finite at the optimizer start point.
class BadStartError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed sweep/CLI configuration, reported before any work starts.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace eqchirp
