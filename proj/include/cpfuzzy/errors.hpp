#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cpfuzzy {

enum class ErrorCode {
  OutOfRange,
  ConstraintViolation,
  RadiusOutOfRange,
  UniverseMismatch,
  DuplicateLabel,
  NonPositiveScalar,
  EmptyInput,
  LengthMismatch,
  InvalidWeights,
  DimensionMismatch,
  DegenerateCenter,
  UnknownOperator,
  DomainError,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every validation or domain failure in the library is reported as an Error.
/// `where` carries an optional location (field path, file:line:col).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message, std::string where = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string &where() const noexcept { return where_; }

 private:
  ErrorCode code_;
  std::string where_;
};

}  // namespace cpfuzzy
