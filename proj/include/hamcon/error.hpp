#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hamcon {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input exceeds a representation or algorithm cap (vertex count, DP cap, ...).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Operation is undefined for the given input (e.g. min degree of the null graph).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A parameter lies outside the range a construction or formula is stated for.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Malformed graph6 input. `offset()` is the byte position of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An enumeration ran past its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace hamcon
