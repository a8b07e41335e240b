#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tamecert/matrix.hpp"

namespace tamecert {

/// [e_i, e_j] = sum_k value[k] e_k, with i < j.
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::map<std::size_t, Scalar> value;
};

/// Finite-dimensional real Lie algebra given by exact structure constants on a
/// fixed basis. Instances always satisfy the Jacobi identity.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  /// Validates the input and throws DimensionMismatch or JacobiViolation.
  static LieAlgebra create(std::vector<std::string> labels, const std::vector<BracketEntry>& brackets);
  static LieAlgebra abelian(std::size_t n);
  /// Structure constants from a dense tensor c[(i * n + j) * n + k]; validated.
  static LieAlgebra from_tensor(std::vector<std::string> labels, std::vector<Scalar> constants);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  Vector bracket_basis(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& x, const Vector& y) const;

  /// Matrix of Y -> [e_i, Y].
  const Matrix& ad_basis(std::size_t i) const { return ad_[i]; }
  /// Matrix of Y -> [X, Y].
  Matrix adjoint(const Vector& x) const;

  /// Nonzero brackets [e_i, e_j], i < j, in lexicographic order.
  std::vector<BracketEntry> brackets() const;
  bool is_abelian() const;

  /// Same basis, every structure constant multiplied by t.
  LieAlgebra scaled(const Scalar& t) const;
  /// Structure constants in the basis given by the columns of the invertible matrix p.
  LieAlgebra change_basis(const Matrix& p) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.labels_ == b.labels_ && a.c_ == b.c_;
  }

 private:
  LieAlgebra(std::vector<std::string> labels, std::vector<Scalar> constants);
  void check_jacobi() const;

  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Scalar> c_;
  std::vector<Matrix> ad_;
};

/// [[x,y],z] + [[y,z],x] + [[z,x],y].
Vector jacobiator(const LieAlgebra& g, const Vector& x, const Vector& y, const Vector& z);

}  // namespace tamecert
