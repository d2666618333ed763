#pragma once

#include <stdexcept>
#include <string>

namespace locopred {

// Base for all engine errors that are worth distinguishing at the CLI
// boundary (exit code mapping lives in tools/).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed backend response / JSON payload.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Invalid dataset, snapshot, or log content.
class DataError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration key, value, or invariant.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Backend transport or protocol failure.
class BackendError : public Error {
 public:
  using Error::Error;
};

}  // namespace locopred
