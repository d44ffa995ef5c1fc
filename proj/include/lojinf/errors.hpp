#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lojinf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand arities (number of variables) disagree.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// Malformed system file. Carries the 1-based position of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// The Macaulay matrix would exceed the configured column limit.
class MatrixSizeError : public Error {
 public:
  using Error::Error;
};

/// The perturbation fallback rejected too many interpolation nodes.
class NodeExhaustionError : public Error {
 public:
  using Error::Error;
};

/// No linear form G could be certified for the system.
class CertificationError : public Error {
 public:
  using Error::Error;
};

/// The tensor interpolation grid for the full P_G exceeds the configured cap.
class GridCapError : public Error {
 public:
  using Error::Error;
};

/// A computed invariant contradicts a mathematical identity.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// Numerical routine failed to converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace lojinf
