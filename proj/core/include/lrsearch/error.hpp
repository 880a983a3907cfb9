#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lrsearch {

enum class ErrorCode {
  kEmptyInput,
  kDuplicateElement,
  kOutOfRange,
  kLengthMismatch,
  kConservedEndpointViolation,
  kNotNormalized,
  kPreconditionNotChecked,
  kQueryOutOfRange,
  kNotOnR,
  kBruteForceBoundExceeded,
  kIoError,
  kParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the text reader; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorCode::kParseError,
              std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lrsearch
