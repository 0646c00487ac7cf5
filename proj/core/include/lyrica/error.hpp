#pragma once

#include <stdexcept>
#include <string>

namespace lyrica {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid or inconsistent configuration (CLI exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed or unusable input data (CLI exit code 3).
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace lyrica
