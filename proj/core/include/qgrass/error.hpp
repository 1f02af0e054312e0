#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qgrass {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a mathematical precondition (shape mismatch, unstable
/// witness, wrong quiver, non-prime modulus, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A finite-field enumeration would exceed the configured budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& estimate, const std::string& budget)
      : Error("enumeration budget exceeded: estimated " + estimate +
              " tuples, budget " + budget),
        estimate_(estimate) {}

  /// Estimated enumeration size, in decimal.
  const std::string& estimate() const noexcept { return estimate_; }

 private:
  std::string estimate_;
};

/// Malformed input document; `position()` is a human-readable location.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string position)
      : Error(what + " (at " + position + ")"), position_(std::move(position)) {}

  const std::string& position() const noexcept { return position_; }

 private:
  std::string position_;
};

}  // namespace qgrass
