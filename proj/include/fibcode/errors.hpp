#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fibcode {

// Base type for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An argument outside an operation's domain (bad index, even order, ...).
struct DomainError : Error {
  using Error::Error;
};

// A message rejected by its profile; carries the individual violations.
struct ValidationError : Error {
  explicit ValidationError(const std::string& what,
                           std::vector<std::string> violations = {})
      : Error(what), violations(std::move(violations)) {}
  std::vector<std::string> violations;
};

// A decoded matrix violates the message-space constraints.
struct CorruptionError : Error {
  using Error::Error;
};

// Fixed-point arithmetic cannot certify the rounding decision.
struct PrecisionError : Error {
  using Error::Error;
};

// (n, k) parameters outside the admissible region.
struct ParameterError : Error {
  using Error::Error;
};

// Brute-force enumeration would exceed the configured budget.
struct OracleSpaceError : Error {
  using Error::Error;
};

// Simulation configuration rejected before any trial ran.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace fibcode
