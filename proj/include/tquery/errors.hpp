#pragma once

#include <stdexcept>
#include <string>

namespace tquery {

/// Syntax error in query text. Positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(message), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Malformed input data. line/column are 1-based, or 0 when the error is
/// structural rather than lexical (e.g. an array nested directly in an array).
class DecodeError : public std::runtime_error {
 public:
  explicit DecodeError(const std::string& message, int line = 0, int column = 0)
      : std::runtime_error(message), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class EncodeError : public std::runtime_error {
 public:
  explicit EncodeError(const std::string& message) : std::runtime_error(message) {}
};

/// Pipeline execution failure, e.g. a lookup adjunct with no bound dataset.
class EvalError : public std::runtime_error {
 public:
  explicit EvalError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace tquery
