#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <vector>

#include "tamecert/scalar.hpp"

namespace tamecert {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  Matrix transpose() const;
  Scalar trace() const;
  bool is_zero() const;
  bool is_symmetric() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend Vector operator*(const Matrix& a, const Vector& v);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form; pivots[r] is the pivot column of row r.
struct EchelonForm {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

EchelonForm rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, returned in reduced echelon form (canonical).
std::vector<Vector> kernel_basis(const Matrix& m);

/// Some solution of m x = b, if one exists.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

Scalar determinant(Matrix m);

/// det of the k x k upper-left blocks, k = 1..n.
std::vector<Scalar> leading_principal_minors(const Matrix& m);

/// Sylvester's criterion on a symmetric matrix.
bool is_positive_definite(const Matrix& m);

/// Coefficients c_0..c_n (low to high) of det(t I - m), via Faddeev-LeVerrier.
std::vector<Scalar> characteristic_polynomial(const Matrix& m);

/// True iff m^k = 0 for k = rows.
bool is_nilpotent(const Matrix& m);

Eigen::MatrixXd to_eigen(const Matrix& m);
Eigen::VectorXd to_eigen(const Vector& v);

}  // namespace tamecert

namespace tamecert {
std::optional<Matrix> inverse(const Matrix& m);
}  // namespace tamecert
