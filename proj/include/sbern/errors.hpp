#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sbern {

enum class ErrorKind {
  ComponentExceeds,
  OrderExceedsDegree,
  DegenerateSimplex,
  DegreeMismatch,
  DimensionMismatch,
  BadEdge,
  DegreeTooLow,
  DenominatorNotPositive,
  SimplexMismatch,
  NonPositiveClaim,
  NonPositiveEpsilon,
  NotPositive,
  InvalidArgument,
  ParseError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a denominator patch has a non-positive Bernstein coefficient.
/// `indices` are positions in canonical index order.
class DenominatorNotPositive : public Error {
 public:
  DenominatorNotPositive(std::vector<std::size_t> indices, const std::string& where);

  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

 private:
  std::vector<std::size_t> indices_;
};

}  // namespace sbern
