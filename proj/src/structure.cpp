#include "tamecert/structure.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "tamecert/errors.hpp"
#include "tamecert/polynomial.hpp"

namespace tamecert {

UnimodularCheck is_unimodular(const LieAlgebra& g) {
  UnimodularCheck out;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Scalar t = g.ad_basis(i).trace();
    if (t != 0) {
      out.unimodular = false;
      out.witness = i;
      out.witness_trace = t;
      break;
    }
  }
  return out;
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& s, const Subspace& t) {
  std::vector<Vector> vecs;
  for (const auto& a : s.basis())
    for (const auto& b : t.basis()) {
      Vector c = g.bracket(a, b);
      if (!is_zero(c)) vecs.push_back(std::move(c));
    }
  return Subspace(g.dim(), vecs);
}

Subspace derived_algebra(const LieAlgebra& g) {
  const auto all = Subspace::whole(g.dim());
  return bracket_span(g, all, all);
}

std::vector<Subspace> derived_series(const LieAlgebra& g) {
  std::vector<Subspace> series{Subspace::whole(g.dim())};
  while (!series.back().is_zero()) {
    Subspace next = bracket_span(g, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  const auto all = Subspace::whole(g.dim());
  std::vector<Subspace> series{all};
  while (!series.back().is_zero()) {
    Subspace next = bracket_span(g, all, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const LieAlgebra& g) { return derived_series(g).back().is_zero(); }

bool is_nilpotent(const LieAlgebra& g) { return lower_central_series(g).back().is_zero(); }

Subspace centralizer(const LieAlgebra& g, const Subspace& s) {
  const std::size_t n = g.dim();
  std::vector<Vector> rows;
  for (const auto& x : s.basis()) {
    const Matrix ad = g.adjoint(x);
    for (std::size_t r = 0; r < n; ++r) rows.push_back(ad.row(r));
  }
  if (rows.empty()) return Subspace::whole(n);
  return Subspace(n, kernel_basis(Matrix::from_rows(rows, n)));
}

Subspace center(const LieAlgebra& g) { return centralizer(g, Subspace::whole(g.dim())); }

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (const auto& v : s.basis())
      if (!s.contains(g.ad_basis(i) * v)) return false;
  return true;
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) {
  const auto& b = s.basis();
  for (std::size_t a = 0; a < b.size(); ++a)
    for (std::size_t c = a + 1; c < b.size(); ++c)
      if (!s.contains(g.bracket(b[a], b[c]))) return false;
  return true;
}

Matrix restrict_to(const Matrix& op, const Subspace& s) {
  std::vector<Vector> cols;
  for (const auto& v : s.basis()) cols.push_back(s.coordinates(op * v));
  return Matrix::from_columns(cols, s.dim());
}

CompleteSolvability is_completely_solvable(const LieAlgebra& g) {
  CompleteSolvability out;
  out.solvable = is_solvable(g);
  if (!out.solvable) return out;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const Polynomial p(characteristic_polynomial(g.ad_basis(i)));
    if (has_only_real_roots(p)) continue;
    out.witness = i;
    for (const auto& z : numeric_roots(p))
      if (std::abs(z.imag()) > std::abs(out.witness_eigenvalue.imag())) out.witness_eigenvalue = z;
    return out;
  }
  out.completely_solvable = true;
  return out;
}

namespace {

/// Incremental echelon basis of a subspace of Q^m, used for the associative closure.
class EchelonAccumulator {
 public:
  explicit EchelonAccumulator(std::size_t m) : m_(m) {}

  /// Adds v if independent; returns true when it was added.
  bool insert(Vector v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Scalar f = v[pivots_[k]];
      if (f != 0) axpy(v, -f, rows_[k]);
    }
    std::size_t p = 0;
    while (p < m_ && v[p] == 0) ++p;
    if (p == m_) return false;
    const Scalar inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  const std::vector<Vector>& rows() const { return rows_; }

 private:
  std::size_t m_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

Matrix unflatten(const Vector& v, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = v[r * n + c];
  return m;
}

}  // namespace

Subspace nilradical(const LieAlgebra& g) {
  if (!is_solvable(g)) throw NotSolvable();
  const std::size_t n = g.dim();
  if (n == 0) return Subspace(0);
  // For solvable g, tr(ad_x M) = sum_k lambda_k(x) mu_k(M) over the triangular weights;
  // letting M range over the unital algebra generated by ad separates the weights.
  EchelonAccumulator acc(n * n);
  std::deque<Matrix> queue;
  const Matrix id = Matrix::identity(n);
  acc.insert(flatten(id));
  queue.push_back(id);
  while (!queue.empty()) {
    const Matrix m = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      Matrix prod = g.ad_basis(i) * m;
      if (acc.insert(flatten(prod))) queue.push_back(std::move(prod));
    }
  }
  std::vector<Vector> functionals;
  for (const auto& row : acc.rows()) {
    const Matrix m = unflatten(row, n);
    Vector f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = (g.ad_basis(i) * m).trace();
    functionals.push_back(std::move(f));
  }
  Subspace result(n, kernel_basis(Matrix::from_rows(functionals, n)));
  for (const auto& x : result.basis())
    if (!is_nilpotent(g.adjoint(x))) throw std::logic_error("nilradical element with non-nilpotent adjoint");
  return result;
}

namespace detail {

namespace {

void split(const std::vector<Matrix>& ops, std::size_t index, const Subspace& s, std::vector<Scalar>& values,
           std::vector<JointEigenspace>& out, std::size_t max_leaves) {
  if (max_leaves > 0 && out.size() >= max_leaves) return;
  if (index == ops.size()) {
    out.push_back({values, s});
    return;
  }
  const Matrix local = restrict_to(ops[index], s);
  for (const auto& mu : rational_roots(Polynomial(characteristic_polynomial(local)))) {
    Matrix shifted = local;
    for (std::size_t i = 0; i < shifted.rows(); ++i) shifted(i, i) -= mu;
    std::vector<Vector> vecs;
    for (const auto& k : kernel_basis(shifted)) {
      Vector v = zero_vector(s.ambient_dim());
      for (std::size_t a = 0; a < k.size(); ++a) axpy(v, k[a], s.basis()[a]);
      vecs.push_back(std::move(v));
    }
    values.push_back(mu);
    split(ops, index + 1, Subspace(s.ambient_dim(), vecs), values, out, max_leaves);
    values.pop_back();
  }
}

}  // namespace

std::vector<JointEigenspace> joint_rational_eigenspaces(const std::vector<Matrix>& ops, const Subspace& s,
                                                        std::size_t max_leaves) {
  std::vector<JointEigenspace> out;
  if (s.is_zero()) return out;
  std::vector<Scalar> values;
  split(ops, 0, s, values, out, max_leaves);
  return out;
}

}  // namespace detail

std::vector<Subspace> one_dim_ideals(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  // A line spanned by v is an ideal iff [x, v] = lambda(x) v, and lambda kills [g, g].
  const Subspace u0 = centralizer(g, derived_algebra(g));
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < n; ++i) ops.push_back(g.ad_basis(i));
  std::vector<Subspace> lines;
  for (const auto& leaf : detail::joint_rational_eigenspaces(ops, u0))
    for (const auto& v : leaf.space.basis()) lines.push_back(Subspace::line(v));
  std::sort(lines.begin(), lines.end(), echelon_less);
  return lines;
}

LieAlgebra quotient(const LieAlgebra& g, const Subspace& h) {
  if (h.ambient_dim() != g.dim()) throw DimensionMismatch("subspace does not live in the algebra");
  if (!is_ideal(g, h)) throw NotAnIdeal("subspace is not an ideal");
  const auto free = h.free_columns();
  const std::size_t m = free.size();
  std::vector<std::string> labels;
  for (auto f : free) labels.push_back(g.labels()[f]);
  std::vector<Scalar> c(m * m * m, Scalar(0));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const Vector w = h.reduce(g.bracket_basis(free[a], free[b]));
      for (std::size_t k = 0; k < m; ++k) c[(a * m + b) * m + k] = w[free[k]];
    }
  return LieAlgebra::from_tensor(std::move(labels), std::move(c));
}

LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& s) {
  if (s.ambient_dim() != g.dim()) throw DimensionMismatch("subspace does not live in the algebra");
  if (!is_subalgebra(g, s)) throw NotASubalgebra("subspace is not closed under the bracket");
  const auto& b = s.basis();
  const std::size_t m = b.size();
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    const bool unit = std::count_if(b[a].begin(), b[a].end(), [](const Scalar& x) { return x != 0; }) == 1;
    labels.push_back(unit ? g.labels()[s.pivots()[a]] : "v" + std::to_string(a + 1));
  }
  std::vector<Scalar> c(m * m * m, Scalar(0));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t d = 0; d < m; ++d) {
      if (a == d) continue;
      const Vector w = s.coordinates(g.bracket(b[a], b[d]));
      for (std::size_t k = 0; k < m; ++k) c[(a * m + d) * m + k] = w[k];
    }
  return LieAlgebra::from_tensor(std::move(labels), std::move(c));
}

}  // namespace tamecert
