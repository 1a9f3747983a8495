#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace macaulay {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Misuse of an operation or a violated mathematical precondition.
class UsageError : public Error {
 public:
  using Error::Error;
};

class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// An element was expected to lie in a span (or submodule) and does not.
class MembershipError : public Error {
 public:
  using Error::Error;
};

// An iteration or degree cap was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)), message_(message), line_(line), column_(column) {}

  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace macaulay
