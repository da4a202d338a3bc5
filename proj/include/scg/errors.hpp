#pragma once

#include <stdexcept>
#include <string>

namespace scg {

// Malformed input: bad cycle text, inconsistent degrees, non-bijective images.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation does not hold for its arguments.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A search ran out of its wall-clock budget before it could finish.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iterative procedure hit its iteration cap without reaching a fixed point.
class TerminationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A result failed a check that the construction promises to hold.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace scg
