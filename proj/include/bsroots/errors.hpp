#pragma once

#include <stdexcept>
#include <string>

namespace bsroots {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad JSON, unit ideal, non-reduced
/// arrangement, duplicate lines, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Input is well formed but outside the domain of the requested computation
/// (d <= n, non-generic arrangement, multiplicity > 3, n > 3, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Exact division of fractional-exponent polynomials left a remainder.
class InexactDivision : public PreconditionError {
 public:
  InexactDivision() : PreconditionError("inexact division") {}
};

}  // namespace bsroots
