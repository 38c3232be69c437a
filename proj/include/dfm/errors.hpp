#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dfm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic misuse: zero denominators, division by zero, poles.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

class ZeroDenominator : public ArithmeticError {
 public:
  ZeroDenominator() : ArithmeticError("zero denominator") {}
};

class DivisionByZero : public ArithmeticError {
 public:
  DivisionByZero() : ArithmeticError("division by zero") {}
};

class PoleAtPoint : public ArithmeticError {
 public:
  explicit PoleAtPoint(const std::string& where)
      : ArithmeticError("pole at t = " + where) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what)
      : Error("dimension mismatch: " + what) {}
};

/// Raised when a precondition that carries mathematical meaning fails
/// (e.g. decomposing a matrix that does not commute with its derivative).
class HypothesisViolated : public Error {
 public:
  explicit HypothesisViolated(const std::string& what)
      : Error("hypothesis violated: " + what) {}
};

class NotInSpan : public Error {
 public:
  NotInSpan() : Error("function is not in the constant span of the basis") {}
};

class NoWitness : public Error {
 public:
  explicit NoWitness(const std::string& what) : Error("no witness: " + what) {}
};

class NotIdempotent : public Error {
 public:
  NotIdempotent() : Error("matrix is not idempotent") {}
};

class NotCoprime : public Error {
 public:
  NotCoprime() : Error("factors are not pairwise coprime") {}
};

class NumericalBreakdown : public Error {
 public:
  explicit NumericalBreakdown(const std::string& what)
      : Error("numerical breakdown: " + what) {}
};

/// A proven identity failed at runtime. Never expected to fire.
class InternalContradiction : public std::logic_error {
 public:
  explicit InternalContradiction(const std::string& what)
      : std::logic_error("internal contradiction: " + what) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string token,
             const std::string& message)
      : Error(format(line, column, token, message)),
        line_(line),
        column_(column),
        token_(std::move(token)) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& token() const { return token_; }

 private:
  static std::string format(std::size_t line, std::size_t column,
                            const std::string& token,
                            const std::string& message) {
    return "parse error at " + std::to_string(line) + ":" +
           std::to_string(column) + " near '" + token + "': " + message;
  }

  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& what) : Error("shape error: " + what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error("i/o error: " + what) {}
};

}  // namespace dfm
