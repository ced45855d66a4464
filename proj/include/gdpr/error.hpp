#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gdpr {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration step would generate more objects than the configured cap.
class CombinatorialLimit : public Error {
 public:
  CombinatorialLimit(const std::string& what, std::size_t cap)
      : Error(what + " exceeds combinatorial cap of " + std::to_string(cap)),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

/// An operator precondition on consistency did not hold.
class InconsistentInput : public Error {
 public:
  using Error::Error;
};

/// Constructing a value violated a data invariant (domains, empty sets, names).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Operand schemes do not fit the operator.
class SchemeMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownRelation : public Error {
 public:
  explicit UnknownRelation(const std::string& name)
      : Error("unknown relation '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// A formula refers to an unknown attribute or an out-of-domain constant.
class ScopeError : public Error {
 public:
  using Error::Error;
};

class FormulaError : public Error {
 public:
  using Error::Error;
};

/// Syntax error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column,
             std::vector<std::string> expected = {})
      : Error(format(message, line, column, expected)),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column,
                            const std::vector<std::string>& expected) {
    std::string out = std::to_string(line) + ":" + std::to_string(column) +
                      ": " + message;
    if (!expected.empty()) {
      out += " (expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) out += i + 1 == expected.size() ? " or " : ", ";
        out += expected[i];
      }
      out += ")";
    }
    return out;
  }

  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

}  // namespace gdpr
