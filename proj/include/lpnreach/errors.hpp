#ifndef LPNREACH_ERRORS_HPP
#define LPNREACH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lpnreach {

// Syntax error in an expression or model file. Positions are 1-based;
// line is 0 for standalone expression text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, int line, int column)
      : std::runtime_error(format(msg, line, column)),
        message_(std::move(msg)),
        line_(line),
        column_(column) {}

  // The diagnostic without the position prefix, for re-wrapping.
  const std::string& message() const { return message_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& msg, int line, int column) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    if (column > 0) out += "column " + std::to_string(column) + ": ";
    return out + msg;
  }
  std::string message_;
  int line_;
  int column_;
};

// Semantic error in a model: unknown names, duplicate ids, inconsistent
// shared-variable initial values, malformed nets.
class ModelError : public std::runtime_error {
 public:
  explicit ModelError(const std::string& msg) : std::runtime_error(msg) {}
};

// Runtime evaluation failure: division by zero, overflow, negative exponent.
class EvalError : public std::runtime_error {
 public:
  explicit EvalError(const std::string& msg) : std::runtime_error(msg) {}
};

// API misuse that the caller must never trigger (firing a disabled
// transition, removing a diagram twice, arity mismatch).
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace lpnreach

#endif
