#pragma once

#include <cstddef>
#include <vector>

#include "tamecert/lie_algebra.hpp"

namespace tamecert::forms {

bool squares_to_minus_identity(const Matrix& j);

/// Endomorphism J with J^2 = -I. Column c of the matrix is J(e_c).
class ComplexStructure {
 public:
  ComplexStructure() = default;
  /// Throws NotAComplexStructure for a non-square matrix, odd dimension or J^2 != -I.
  static ComplexStructure create(Matrix j);
  /// J(e_{2k}) = e_{2k+1} on an even-dimensional space (zero-indexed).
  static ComplexStructure standard(std::size_t n);

  std::size_t dim() const { return j_.rows(); }
  const Matrix& matrix() const { return j_; }
  Vector operator()(const Vector& x) const { return j_ * x; }

  friend bool operator==(const ComplexStructure& a, const ComplexStructure& b) { return a.j_ == b.j_; }

 private:
  Matrix j_;
};

struct NijenhuisValue {
  std::size_t i = 0;
  std::size_t j = 0;
  Vector value;
};

/// N(X, Y) = [JX, JY] - [X, Y] - J[JX, Y] - J[X, JY] (no 1/4 normalisation).
Vector nijenhuis(const LieAlgebra& g, const ComplexStructure& J, const Vector& x, const Vector& y);
/// N(e_i, e_j) for every i < j.
std::vector<NijenhuisValue> nijenhuis(const LieAlgebra& g, const ComplexStructure& J);
bool is_integrable(const LieAlgebra& g, const ComplexStructure& J);

}  // namespace tamecert::forms
