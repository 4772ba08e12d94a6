#pragma once

#include <stdexcept>
#include <string>

namespace rindler {

// Bad caller input: out-of-range parameters, wrong dimensions, non-Hermitian
// matrices handed to Hermitian routines.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Eigenvalue below the -1e-10 round-off floor.
class PsdViolation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A result failed its own postcondition. Indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rindler
