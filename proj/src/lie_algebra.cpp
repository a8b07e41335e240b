#include "tamecert/lie_algebra.hpp"

#include "tamecert/errors.hpp"

namespace tamecert {

LieAlgebra::LieAlgebra(std::vector<std::string> labels, std::vector<Scalar> constants)
    : dim_(labels.size()), labels_(std::move(labels)), c_(std::move(constants)) {
  ad_.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) m(k, j) = constant(i, j, k);
    ad_.push_back(std::move(m));
  }
}

LieAlgebra LieAlgebra::create(std::vector<std::string> labels, const std::vector<BracketEntry>& brackets) {
  const std::size_t n = labels.size();
  std::vector<Scalar> c(n * n * n, Scalar(0));
  std::vector<bool> seen(n * n, false);
  for (const auto& b : brackets) {
    if (b.i >= n || b.j >= n)
      throw DimensionMismatch("bracket index (" + std::to_string(b.i) + ", " + std::to_string(b.j) +
                              ") out of range for dimension " + std::to_string(n));
    if (b.i >= b.j)
      throw DimensionMismatch("bracket (" + std::to_string(b.i) + ", " + std::to_string(b.j) +
                              ") must satisfy i < j");
    if (seen[b.i * n + b.j])
      throw DimensionMismatch("bracket (" + std::to_string(b.i) + ", " + std::to_string(b.j) +
                              ") given twice");
    seen[b.i * n + b.j] = true;
    for (const auto& [k, v] : b.value) {
      if (k >= n)
        throw DimensionMismatch("bracket component " + std::to_string(k) + " out of range for dimension " +
                                std::to_string(n));
      c[(b.i * n + b.j) * n + k] = v;
      c[(b.j * n + b.i) * n + k] = -v;
    }
  }
  return from_tensor(std::move(labels), std::move(c));
}

LieAlgebra LieAlgebra::abelian(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  return LieAlgebra(std::move(labels), std::vector<Scalar>(n * n * n, Scalar(0)));
}

LieAlgebra LieAlgebra::from_tensor(std::vector<std::string> labels, std::vector<Scalar> constants) {
  const std::size_t n = labels.size();
  if (constants.size() != n * n * n)
    throw DimensionMismatch("structure tensor has " + std::to_string(constants.size()) + " entries, expected " +
                            std::to_string(n * n * n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (constants[(i * n + j) * n + k] != -constants[(j * n + i) * n + k])
          throw DimensionMismatch("structure tensor is not antisymmetric");
  LieAlgebra g(std::move(labels), std::move(constants));
  g.check_jacobi();
  return g;
}

void LieAlgebra::check_jacobi() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = j + 1; k < dim_; ++k) {
        Vector r = jacobiator(*this, unit_vector(dim_, i), unit_vector(dim_, j), unit_vector(dim_, k));
        if (!is_zero(r)) throw JacobiViolation({i, j, k}, std::move(r));
      }
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const { return ad_[i].col(j); }

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  Vector r = zero_vector(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0 || i == j) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& c = constant(i, j, k);
        if (c != 0) r[k] += xy * c;
      }
    }
  }
  return r;
}

Matrix LieAlgebra::adjoint(const Vector& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    if (x[i] != 0) m = m + x[i] * ad_[i];
  return m;
}

std::vector<BracketEntry> LieAlgebra::brackets() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) {
      BracketEntry b{i, j, {}};
      for (std::size_t k = 0; k < dim_; ++k)
        if (constant(i, j, k) != 0) b.value[k] = constant(i, j, k);
      if (!b.value.empty()) out.push_back(std::move(b));
    }
  return out;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

LieAlgebra LieAlgebra::scaled(const Scalar& t) const {
  std::vector<Scalar> c(c_);
  for (auto& x : c) x *= t;
  return LieAlgebra::from_tensor(labels_, std::move(c));
}

LieAlgebra LieAlgebra::change_basis(const Matrix& p) const {
  if (p.rows() != dim_ || p.cols() != dim_) throw DimensionMismatch("change of basis has wrong shape");
  const auto inv_opt = inverse(p);
  if (!inv_opt) throw DimensionMismatch("change of basis is singular");
  const Matrix& inv = *inv_opt;
  std::vector<Scalar> c(dim_ * dim_ * dim_, Scalar(0));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      const Vector w = inv * bracket(p.col(i), p.col(j));
      for (std::size_t k = 0; k < dim_; ++k) c[(i * dim_ + j) * dim_ + k] = w[k];
    }
  return LieAlgebra::from_tensor(labels_, std::move(c));
}

Vector jacobiator(const LieAlgebra& g, const Vector& x, const Vector& y, const Vector& z) {
  return g.bracket(g.bracket(x, y), z) + g.bracket(g.bracket(y, z), x) + g.bracket(g.bracket(z, x), y);
}

}  // namespace tamecert
