#pragma once

#include <stdexcept>

namespace ipc {

/// Malformed input: neuron out of range, bad partition, unknown variable, ...
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A piercing was requested on a code that is not (lambda, sigma, tau) pierceable.
class NotPierceable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured cap (codes, S-pairs, degree) was hit. Callers report these as
/// skips; they are never silently dropped.
class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A floating-point construction could not meet its tolerance.
class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ipc
