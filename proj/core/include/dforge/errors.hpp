#pragma once

#include <stdexcept>
#include <string>

namespace dforge {

// Base of every error raised by the library. The CLI maps the subclasses
// onto exit codes: ConfigError -> 2, PrecisionError -> 3, MathError -> 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-bounds input (bad modulus, size bound exceeded, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A truncated computation cannot resolve the requested quantity.
class PrecisionError : public Error {
 public:
  explicit PrecisionError(const std::string& what, long required = -1)
      : Error(what), required_(required) {}

  // Suggested precision bound that would succeed, or -1 when unknown.
  long required() const noexcept { return required_; }

 private:
  long required_;
};

// A mathematical precondition does not hold (non-unit, rank 0, ...).
class MathError : public Error {
 public:
  using Error::Error;
};

}  // namespace dforge
