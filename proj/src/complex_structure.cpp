#include "tamecert/complex_structure.hpp"

#include "tamecert/errors.hpp"

namespace tamecert::forms {

bool squares_to_minus_identity(const Matrix& j) {
  if (!j.is_square()) return false;
  Matrix sq = j * j;
  for (std::size_t i = 0; i < sq.rows(); ++i) sq(i, i) += 1;
  return sq.is_zero();
}

ComplexStructure ComplexStructure::create(Matrix j) {
  if (!j.is_square()) throw NotAComplexStructure("J must be square");
  if (j.rows() % 2 != 0) throw NotAComplexStructure("J requires an even dimension");
  if (!squares_to_minus_identity(j)) throw NotAComplexStructure("J^2 != -I");
  ComplexStructure out;
  out.j_ = std::move(j);
  return out;
}

ComplexStructure ComplexStructure::standard(std::size_t n) {
  if (n % 2 != 0) throw NotAComplexStructure("J requires an even dimension");
  Matrix j(n, n);
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    j(k + 1, k) = 1;
    j(k, k + 1) = -1;
  }
  return create(std::move(j));
}

Vector nijenhuis(const LieAlgebra& g, const ComplexStructure& J, const Vector& x, const Vector& y) {
  const Vector jx = J(x), jy = J(y);
  return g.bracket(jx, jy) - g.bracket(x, y) - J(g.bracket(jx, y)) - J(g.bracket(x, jy));
}

std::vector<NijenhuisValue> nijenhuis(const LieAlgebra& g, const ComplexStructure& J) {
  if (J.dim() != g.dim()) throw DimensionMismatch("J and algebra dimensions differ");
  const std::size_t n = g.dim();
  std::vector<NijenhuisValue> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      out.push_back({i, j, nijenhuis(g, J, unit_vector(n, i), unit_vector(n, j))});
  return out;
}

bool is_integrable(const LieAlgebra& g, const ComplexStructure& J) {
  for (const auto& v : nijenhuis(g, J))
    if (!is_zero(v.value)) return false;
  return true;
}

}  // namespace tamecert::forms
