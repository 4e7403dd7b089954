#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tanlift {

enum class ErrorCode {
  InvalidArgument,
  VariableMismatch,
  MissingAssignment,
  EpsilonMismatch,
  NotUnimodular,
  InexactDivision,
  ChartMismatch,
  ValenceMismatch,
  MissingConnection,
  MissingMetric,
  Unsupported,
  OddDimension,
  Parse,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorCode::Parse, "line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace tanlift
