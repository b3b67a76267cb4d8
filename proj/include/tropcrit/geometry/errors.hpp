#pragma once

#include <stdexcept>
#include <string>

namespace tropcrit {

/// Input that is not a valid complex: mixed dimensions, overlapping cells.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal cross-check failed. Always a bug or a violated precondition
/// that could not be detected up front.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tropcrit
