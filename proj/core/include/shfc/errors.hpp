#pragma once

#include <stdexcept>
#include <string>

namespace shfc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different rings (characteristic or variable count).
class RingMismatch : public Error {
 public:
  RingMismatch() : Error("ring mismatch") {}
};

/// A precondition on an argument was violated (index out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    if (line <= 0) return "parse error: " + what;
    return "parse error at line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + what;
  }

  int line_;
  int column_;
};

/// A relation column whose entries do not share one degree.
class InhomogeneousError : public Error {
 public:
  explicit InhomogeneousError(int column)
      : Error("inhomogeneous column " + std::to_string(column)), column_(column) {}

  int column() const noexcept { return column_; }

 private:
  int column_;
};

/// Raised when a construction requires a locally free sheaf and the
/// probabilistic fiber-rank gate rejects the input.
class NotLocallyFreeError : public Error {
 public:
  using Error::Error;
};

}  // namespace shfc
