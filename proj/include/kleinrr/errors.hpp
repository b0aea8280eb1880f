#pragma once

#include <stdexcept>
#include <string>

namespace kleinrr {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: bad group spec, unknown symbol, length mismatch.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Construction parameters that cannot be honoured (closure cap exceeded).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Internal data disagrees with itself: a table or generator bug.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation was violated by the caller.
class ContractError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

}  // namespace kleinrr
