#pragma once

#include <stdexcept>
#include <string>

namespace tima {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid flags or configuration supplied by the caller. CLI exit code 1.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Malformed or unusable input data. CLI exit code 2.
class DataError : public Error {
 public:
  using Error::Error;
};

/// A broken internal invariant. CLI exit code 3.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace tima
