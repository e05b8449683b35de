#pragma once

#include <stdexcept>
#include <string>

namespace tslab {

/// Input violates an operation's precondition (grid mismatch, bad parameter).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A nonlinear solve found no admissible solution (e.g. no shooting bracket).
class NoSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// NaN/overflow or an unstable time step detected during integration.
class NumericalBreakdown : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CflViolation : public NumericalBreakdown {
 public:
  using NumericalBreakdown::NumericalBreakdown;
};

}  // namespace tslab
