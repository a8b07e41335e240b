#include "tamecert/subspace.hpp"

#include <algorithm>
#include <cassert>

namespace tamecert {

Subspace::Subspace(std::size_t ambient_dim, const std::vector<Vector>& spanning)
    : ambient_dim_(ambient_dim) {
  if (spanning.empty()) return;
  for ([[maybe_unused]] const auto& v : spanning) assert(v.size() == ambient_dim);
  auto e = rref(Matrix::from_rows(spanning, ambient_dim));
  for (std::size_t r = 0; r < e.reduced.rows(); ++r) basis_.push_back(e.reduced.row(r));
  pivots_ = std::move(e.pivots);
}

Subspace Subspace::whole(std::size_t n) {
  Subspace s(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.basis_.push_back(unit_vector(n, i));
    s.pivots_.push_back(i);
  }
  return s;
}

std::vector<std::size_t> Subspace::free_columns() const {
  std::vector<std::size_t> free;
  std::size_t p = 0;
  for (std::size_t c = 0; c < ambient_dim_; ++c) {
    if (p < pivots_.size() && pivots_[p] == c) {
      ++p;
      continue;
    }
    free.push_back(c);
  }
  return free;
}

Vector Subspace::reduce(const Vector& v) const {
  Vector r(v);
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Scalar f = r[pivots_[k]];
    if (f != 0) axpy(r, -f, basis_[k]);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return tamecert::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  assert(contains(v));
  Vector c(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) c[k] = v[pivots_[k]];
  return c;
}

Matrix Subspace::basis_matrix() const { return Matrix::from_columns(basis_, ambient_dim_); }

Subspace sum(const Subspace& a, const Subspace& b) {
  std::vector<Vector> all(a.basis());
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace(a.ambient_dim(), all);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  // x = sum_i s_i a_i = sum_j t_j b_j  <=>  [A | -B] (s, t) = 0.
  const std::size_t n = a.ambient_dim();
  const std::size_t da = a.dim(), db = b.dim();
  if (da == 0 || db == 0) return Subspace(n);
  Matrix m(n, da + db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t r = 0; r < n; ++r) m(r, i) = a.basis()[i][r];
  for (std::size_t j = 0; j < db; ++j)
    for (std::size_t r = 0; r < n; ++r) m(r, da + j) = -b.basis()[j][r];
  std::vector<Vector> vecs;
  for (const auto& k : kernel_basis(m)) {
    Vector x = zero_vector(n);
    for (std::size_t i = 0; i < da; ++i) axpy(x, k[i], a.basis()[i]);
    vecs.push_back(std::move(x));
  }
  return Subspace(n, vecs);
}

Subspace image(const Matrix& m, const Subspace& s) {
  std::vector<Vector> vecs;
  for (const auto& v : s.basis()) vecs.push_back(m * v);
  return Subspace(m.rows(), vecs);
}

bool echelon_less(const Subspace& a, const Subspace& b) {
  if (a.pivots() != b.pivots())
    return std::lexicographical_compare(a.pivots().begin(), a.pivots().end(), b.pivots().begin(),
                                        b.pivots().end());
  for (std::size_t k = 0; k < a.dim() && k < b.dim(); ++k)
    for (std::size_t c = 0; c < a.ambient_dim(); ++c)
      if (a.basis()[k][c] != b.basis()[k][c]) return a.basis()[k][c] < b.basis()[k][c];
  return a.dim() < b.dim();
}

}  // namespace tamecert
