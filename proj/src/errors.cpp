#include "sbern/errors.hpp"

namespace sbern {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ComponentExceeds: return "ComponentExceeds";
    case ErrorKind::OrderExceedsDegree: return "OrderExceedsDegree";
    case ErrorKind::DegenerateSimplex: return "DegenerateSimplex";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BadEdge: return "BadEdge";
    case ErrorKind::DegreeTooLow: return "DegreeTooLow";
    case ErrorKind::DenominatorNotPositive: return "DenominatorNotPositive";
    case ErrorKind::SimplexMismatch: return "SimplexMismatch";
    case ErrorKind::NonPositiveClaim: return "NonPositiveClaim";
    case ErrorKind::NonPositiveEpsilon: return "NonPositiveEpsilon";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string describe(const std::vector<std::size_t>& indices, const std::string& where) {
  std::string msg = "denominator Bernstein coefficient(s) not positive at index position(s) [";
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (k) msg += ", ";
    msg += std::to_string(indices[k]);
  }
  msg += "]";
  if (!where.empty()) msg += " over " + where;
  return msg;
}

}  // namespace

DenominatorNotPositive::DenominatorNotPositive(std::vector<std::size_t> indices,
                                               const std::string& where)
    : Error(ErrorKind::DenominatorNotPositive, describe(indices, where)),
      indices_(std::move(indices)) {}

}  // namespace sbern
