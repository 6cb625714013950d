#pragma once

#include <stdexcept>
#include <string>

namespace platemodal {

/// Invalid argument or input outside the documented domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical failure: non-convergence, tolerance violation, non-finite state.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Request would exceed the configured memory budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Transfer-function evaluation landed on (or numerically at) a pole.
class PoleError : public NumericalError {
 public:
  PoleError(const std::string& what, int mode_index)
      : NumericalError(what), mode_index(mode_index) {}
  int mode_index;
};

/// Input signal unusable for spectral estimation (no excited bins).
class SignalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Half-power bandwidth not resolvable on the given frequency grid.
class BandwidthError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace platemodal
