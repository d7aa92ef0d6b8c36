#pragma once

#include <stdexcept>
#include <string>

namespace tvpoint {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vector lengths disagree, or a size parameter is zero.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Data violates a type invariant (non-finite values, out-of-range times, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configuration object violates its constraints.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace tvpoint
