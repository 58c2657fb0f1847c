#pragma once

#include <stdexcept>
#include <string>

namespace gon {

// Base of every error raised by the library. Each subclass maps onto one
// process exit status of the command-line tool.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or geometrically invalid input (singular basis, non-PD form,
// dimension mismatch, unparsable rational).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A computation refused because its work bound would be exceeded.
class CapacityError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Inputs are well formed but do not satisfy the hypotheses of the
// statement being replayed (separation, (C1), (C2)).
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

// A checked inequality or identity failed. On valid input this is never
// expected and indicates a bug.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace gon
