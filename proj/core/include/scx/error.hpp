#pragma once

#include <stdexcept>
#include <string>

namespace scx {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad vertex, non-antichain, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Malformed external data (JSON files, rational strings, CLI specs).
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

/// Eigensolver non-convergence or a failed internal exactness certificate.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// A size guard on an exhaustive search was exceeded.
class GuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace scx
