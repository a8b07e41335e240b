#include "tamecert/forms.hpp"

#include "tamecert/errors.hpp"

namespace tamecert::forms {

std::size_t pair_count(std::size_t n) { return n * (n - (n ? 1 : 0)) / 2; }

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  // Rows before i contribute (n-1) + (n-2) + ... + (n-i) pairs.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::vector<std::pair<std::size_t, std::size_t>> index_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

namespace {

std::size_t triple_index(std::size_t i, std::size_t j, std::size_t k, std::size_t n) {
  std::size_t idx = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        if (a == i && b == j && c == k) return idx;
        ++idx;
      }
  throw DimensionMismatch("triple index out of range");
}

std::size_t triple_count(std::size_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

}  // namespace

TwoForm TwoForm::from_matrix(Matrix m) {
  if (!m.is_square()) throw DimensionMismatch("2-form matrix must be square");
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = r; c < m.cols(); ++c)
      if (m(r, c) != -m(c, r)) throw DimensionMismatch("2-form matrix must be skew-symmetric");
  TwoForm w(m.rows());
  w.m_ = std::move(m);
  return w;
}

TwoForm TwoForm::from_coefficients(std::size_t dim, const Vector& coefficients) {
  if (coefficients.size() != pair_count(dim)) throw DimensionMismatch("wrong number of 2-form coefficients");
  TwoForm w(dim);
  std::size_t idx = 0;
  for (const auto& [i, j] : index_pairs(dim)) w.set(i, j, coefficients[idx++]);
  return w;
}

void TwoForm::set(std::size_t i, std::size_t j, const Scalar& value) {
  m_(i, j) = value;
  m_(j, i) = -value;
}

Scalar TwoForm::operator()(const Vector& x, const Vector& y) const { return dot(x, m_ * y); }

Vector TwoForm::coefficients() const {
  Vector c;
  for (const auto& [i, j] : index_pairs(dim())) c.push_back(m_(i, j));
  return c;
}

TwoForm operator+(const TwoForm& a, const TwoForm& b) { return TwoForm::from_matrix(a.m_ + b.m_); }

TwoForm operator*(const Scalar& s, const TwoForm& a) { return TwoForm::from_matrix(s * a.m_); }

ThreeForm::ThreeForm(std::size_t dim) : dim_(dim), c_(triple_count(dim), Scalar(0)) {}

ThreeForm::ThreeForm(std::size_t dim, Vector coefficients) : dim_(dim), c_(std::move(coefficients)) {
  if (c_.size() != triple_count(dim)) throw DimensionMismatch("wrong number of 3-form coefficients");
}

const Scalar& ThreeForm::coefficient(std::size_t i, std::size_t j, std::size_t k) const {
  return c_[triple_index(i, j, k, dim_)];
}

Scalar& ThreeForm::coefficient(std::size_t i, std::size_t j, std::size_t k) {
  return c_[triple_index(i, j, k, dim_)];
}

TwoForm d(const LieAlgebra& g, const Vector& one_form) {
  const std::size_t n = g.dim();
  if (one_form.size() != n) throw DimensionMismatch("1-form has wrong dimension");
  TwoForm out(n);
  for (const auto& [i, j] : index_pairs(n)) out.set(i, j, -dot(one_form, g.bracket_basis(i, j)));
  return out;
}

ThreeForm d(const LieAlgebra& g, const TwoForm& w) {
  const std::size_t n = g.dim();
  if (w.dim() != n) throw DimensionMismatch("2-form has wrong dimension");
  const Matrix& m = w.matrix();
  Vector coeffs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        // w([e_a, e_b], e_c) = sum_l c_ab^l w_lc
        Scalar s = 0;
        for (std::size_t l = 0; l < n; ++l) {
          s -= g.constant(i, j, l) * m(l, k);
          s -= g.constant(j, k, l) * m(l, i);
          s -= g.constant(k, i, l) * m(l, j);
        }
        coeffs.push_back(std::move(s));
      }
  return ThreeForm(n, std::move(coeffs));
}

Matrix two_form_differential(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const auto pairs = index_pairs(n);
  Matrix m(triple_count(n), pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    TwoForm basis(n);
    basis.set(pairs[p].first, pairs[p].second, 1);
    const ThreeForm dw = d(g, basis);
    for (std::size_t t = 0; t < dw.coefficients().size(); ++t) m(t, p) = dw.coefficients()[t];
  }
  return m;
}

std::vector<TwoForm> closed_two_forms(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<TwoForm> out;
  if (n < 3) {
    for (const auto& [i, j] : index_pairs(n)) {
      TwoForm w(n);
      w.set(i, j, 1);
      out.push_back(std::move(w));
    }
    return out;
  }
  for (const auto& k : kernel_basis(two_form_differential(g))) out.push_back(TwoForm::from_coefficients(n, k));
  return out;
}

}  // namespace tamecert::forms
