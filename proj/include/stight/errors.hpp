#pragma once

#include <stdexcept>
#include <string>

namespace stight {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad vertex id, bad parameters, parse failure).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Input is well formed but violates an operation's mathematical precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The requested computation exceeds a configured size cap.
class RefusalError : public Error {
 public:
  using Error::Error;
};

/// Exact integer arithmetic would overflow 64 bits.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// The abelian Cayley classification failed to decompose a Seymour connection
/// set. This would falsify the classification theorem and is never swallowed.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace stight
