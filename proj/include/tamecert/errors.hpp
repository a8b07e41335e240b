#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "tamecert/scalar.hpp"

namespace tamecert {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::string field, const std::string& message)
      : Error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// The Jacobi expression of a basis triple is nonzero.
class JacobiViolation : public Error {
 public:
  JacobiViolation(std::array<std::size_t, 3> triple, Vector residual);
  const std::array<std::size_t, 3>& triple() const { return triple_; }
  const Vector& residual() const { return residual_; }

 private:
  std::array<std::size_t, 3> triple_;
  Vector residual_;
};

class NotSolvable : public Error {
 public:
  NotSolvable() : Error("algebra is not solvable") {}
};

class NotAnIdeal : public Error {
 public:
  using Error::Error;
};

class NotASubalgebra : public Error {
 public:
  using Error::Error;
};

class NotAComplexStructure : public Error {
 public:
  using Error::Error;
};

class OddDimension : public Error {
 public:
  using Error::Error;
};

class NoOneDimIdeal : public Error {
 public:
  NoOneDimIdeal() : Error("no rational one-dimensional ideal found") {}
};

class NotIsotropic : public Error {
 public:
  using Error::Error;
};

class NotTamed : public Error {
 public:
  using Error::Error;
};

/// A reduced triple failed re-verification. Reduction preserves all four
/// properties, so this always indicates a bug.
class TamingLost : public Error {
 public:
  TamingLost(std::string check, const std::string& message)
      : Error("reduction lost '" + check + "': " + message), check_(std::move(check)) {}
  const std::string& check() const { return check_; }

 private:
  std::string check_;
};

/// No rational rounding of a numerically taming form was exactly positive definite.
class ExactificationFailed : public Error {
 public:
  using Error::Error;
};

/// One of the bracket relations of the isotropic-line frame has a nonzero residual.
class RelationViolation : public Error {
 public:
  RelationViolation(std::string relation, Vector y, Vector residual);
  const std::string& relation() const { return relation_; }
  const Vector& y() const { return y_; }
  const Vector& residual() const { return residual_; }

 private:
  std::string relation_;
  Vector y_;
  Vector residual_;
};

}  // namespace tamecert
