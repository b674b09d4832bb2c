#pragma once

#include <stdexcept>
#include <string>

namespace rotpoly {

/// Base class for everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates a type invariant at construction (non-finite entry,
/// mismatched coefficient lists, empty matrix, bad grid).
class SpecError : public Error {
 public:
  using Error::Error;
};

/// A computation left its numeric domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Rotation-form division by the zero element (a^2 + b^2 = 0).
class DivisionByZeroRotation : public DomainError {
 public:
  DivisionByZeroRotation() : DomainError("division by zero rotation form") {}
};

/// The companion transform T is singular on the real axis (b = 0).
class RealAxisPoint : public DomainError {
 public:
  RealAxisPoint() : DomainError("companion form undefined for b = 0") {}
};

/// Reciprocal requested at (or numerically indistinguishable from) a root.
class EvaluationAtRoot : public DomainError {
 public:
  EvaluationAtRoot() : DomainError("polynomial modulus underflows; point is a root") {}
};

/// An exponent or count that must be >= 1 was not.
class NonPositive : public DomainError {
 public:
  NonPositive() : DomainError("argument must be a positive integer") {}
};

/// Matrix/vector dimensions do not agree.
class DimensionMismatch : public DomainError {
 public:
  using DomainError::DomainError;
  DimensionMismatch() : DomainError("matrix dimensions do not agree") {}
};

/// An all-zero coefficient matrix where a nonzero one is required.
class ZeroMatrix : public DomainError {
 public:
  ZeroMatrix() : DomainError("coefficient matrix is identically zero") {}
};

/// 2D denominator modulus underflows at the evaluation point.
class PoleAtPoint : public DomainError {
 public:
  PoleAtPoint() : DomainError("denominator modulus underflows at evaluation point") {}
};

/// Malformed input document (CLI layer).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace rotpoly
