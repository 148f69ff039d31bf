#include "hyperwalk/error.hpp"

namespace hyperwalk {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyTail: return "EmptyTail";
    case ErrorCode::EmptyHead: return "EmptyHead";
    case ErrorCode::TailHeadOverlap: return "TailHeadOverlap";
    case ErrorCode::NonpositiveWeight: return "NonpositiveWeight";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DuplicateVertexId: return "DuplicateVertexId";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::EmptySide: return "EmptySide";
    case ErrorCode::BadWeight: return "BadWeight";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::DanglingVertex: return "DanglingVertex";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::MultipleSolutions: return "MultipleSolutions";
    case ErrorCode::DenseLimitExceeded: return "DenseLimitExceeded";
    case ErrorCode::NonpositivePi: return "NonpositivePi";
    case ErrorCode::NotStationary: return "NotStationary";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

namespace {

std::string summarize(const ValidationReport& report) {
  std::string out = "validation failed:";
  for (const auto& v : report) {
    out += ' ';
    out += to_string(v.rule);
    out += '(' + v.subject + ')';
  }
  return out;
}

std::string positioned(std::size_t line, std::size_t column, const std::string& message) {
  std::string out;
  if (line > 0) out += "line " + std::to_string(line) + ", ";
  out += "column " + std::to_string(column) + ": " + message;
  return out;
}

}  // namespace

ValidationError::ValidationError(ValidationReport report)
    : Error(report.empty() ? ErrorCode::InvalidArgument : report.front().rule, summarize(report)),
      report_(std::move(report)) {}

ParseError::ParseError(ErrorCode code, std::size_t line, std::size_t column, const std::string& message)
    : Error(code, positioned(line, column, message)), line_(line), column_(column), message_(message) {}

}  // namespace hyperwalk
