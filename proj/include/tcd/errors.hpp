#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tcd {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  explicit SyntaxError(const std::string& msg) : Error(msg) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class InterfaceMismatch : public Error {
 public:
  using Error::Error;
};

class BadPermutation : public Error {
 public:
  using Error::Error;
};

class WidthMismatch : public Error {
 public:
  using Error::Error;
};

class NotAGroup : public Error {
 public:
  using Error::Error;
};

class ClosureTooLarge : public Error {
 public:
  using Error::Error;
};

class UnknownGroup : public Error {
 public:
  using Error::Error;
};

class GroupMismatch : public Error {
 public:
  using Error::Error;
};

class UnboundComponent : public Error {
 public:
  using Error::Error;
};

class InvalidBinding : public Error {
 public:
  using Error::Error;
};

class NotScalar : public Error {
 public:
  using Error::Error;
};

class NotClosed : public Error {
 public:
  using Error::Error;
};

class HasComponents : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class BadParam : public Error {
 public:
  using Error::Error;
};

}  // namespace tcd
