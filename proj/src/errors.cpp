#include "cpfuzzy/errors.hpp"

namespace cpfuzzy {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ConstraintViolation: return "ConstraintViolation";
    case ErrorCode::RadiusOutOfRange: return "RadiusOutOfRange";
    case ErrorCode::UniverseMismatch: return "UniverseMismatch";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::NonPositiveScalar: return "NonPositiveScalar";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::InvalidWeights: return "InvalidWeights";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegenerateCenter: return "DegenerateCenter";
    case ErrorCode::UnknownOperator: return "UnknownOperator";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message, std::string where)
    : std::runtime_error(where.empty() ? message : where + ": " + message), code_(code), where_(std::move(where)) {}

}  // namespace cpfuzzy
