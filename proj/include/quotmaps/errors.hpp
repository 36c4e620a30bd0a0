#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quot {

// Root of everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated precondition or out-of-range parameter.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Operands drawn from different scalar fields (e.g. F_5 vs F_7).
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

// Exact division requested where the divisor does not divide.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

// An enumeration or Groebner computation would exceed its configured size limit.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

// A computed value contradicts a proven identity. Always a bug somewhere.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace quot
