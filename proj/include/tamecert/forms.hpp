#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tamecert/lie_algebra.hpp"

namespace tamecert::forms {

/// Number of index pairs i < j, and the lexicographic position of (i, j).
std::size_t pair_count(std::size_t n);
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n);
std::vector<std::pair<std::size_t, std::size_t>> index_pairs(std::size_t n);

/// Alternating 2-form sum_{i<j} w_ij e^i ^ e^j, with w(e_i, e_j) = w_ij.
/// Stored as the full skew matrix of values w(e_r, e_c).
class TwoForm {
 public:
  explicit TwoForm(std::size_t dim = 0) : m_(dim, dim) {}
  /// Throws DimensionMismatch unless m is square and skew-symmetric.
  static TwoForm from_matrix(Matrix m);
  /// Coefficients over index_pairs(dim).
  static TwoForm from_coefficients(std::size_t dim, const Vector& coefficients);

  std::size_t dim() const { return m_.rows(); }
  const Scalar& coefficient(std::size_t i, std::size_t j) const { return m_(i, j); }
  void set(std::size_t i, std::size_t j, const Scalar& value);
  Scalar operator()(const Vector& x, const Vector& y) const;
  const Matrix& matrix() const { return m_; }
  Vector coefficients() const;
  bool is_zero() const { return m_.is_zero(); }

  friend bool operator==(const TwoForm& a, const TwoForm& b) { return a.m_ == b.m_; }
  friend TwoForm operator+(const TwoForm& a, const TwoForm& b);
  friend TwoForm operator*(const Scalar& s, const TwoForm& a);

 private:
  Matrix m_;
};

/// Alternating 3-form, coefficients over triples i < j < k in lexicographic order.
class ThreeForm {
 public:
  explicit ThreeForm(std::size_t dim = 0);
  ThreeForm(std::size_t dim, Vector coefficients);
  std::size_t dim() const { return dim_; }
  const Scalar& coefficient(std::size_t i, std::size_t j, std::size_t k) const;
  Scalar& coefficient(std::size_t i, std::size_t j, std::size_t k);
  const Vector& coefficients() const { return c_; }
  bool is_zero() const { return tamecert::is_zero(c_); }

 private:
  std::size_t dim_;
  Vector c_;
};

/// Chevalley-Eilenberg differential with d(alpha)(X, Y) = -alpha([X, Y]) on 1-forms,
/// extended as an antiderivation:
///   d(w)(X, Y, Z) = -w([X, Y], Z) - w([Y, Z], X) - w([Z, X], Y).
TwoForm d(const LieAlgebra& g, const Vector& one_form);
ThreeForm d(const LieAlgebra& g, const TwoForm& w);

/// Matrix of d on 2-forms, from index_pairs coordinates to triple coordinates.
Matrix two_form_differential(const LieAlgebra& g);

/// Echelon-canonical basis of the closed 2-forms.
std::vector<TwoForm> closed_two_forms(const LieAlgebra& g);

}  // namespace tamecert::forms
