#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyperwalk {

enum class ErrorCode {
  // structural
  EmptyTail,
  EmptyHead,
  TailHeadOverlap,
  NonpositiveWeight,
  UnknownVertex,
  DuplicateVertexId,
  // parsing
  SyntaxError,
  EmptySide,
  BadWeight,
  SchemaError,
  // numerics
  DanglingVertex,
  NoConvergence,
  MultipleSolutions,
  DenseLimitExceeded,
  NonpositivePi,
  NotStationary,
  InvalidArgument,
  Io,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// One broken rule, attributed to an arc or vertex id.
struct Violation {
  ErrorCode rule;
  std::string subject;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

using ValidationReport = std::vector<Violation>;

class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Parse failure with a 1-based position. `line` is 0 when parsing a lone line.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace hyperwalk
