#pragma once

#include <stdexcept>
#include <string>

namespace dispo {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fixed-width coefficient or count arithmetic left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Two polynomials over different variable contexts were combined.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

// A precondition on an argument (range, label set, duplicate entries) failed.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An internal invariant that the algorithms rely on did not hold.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace dispo
