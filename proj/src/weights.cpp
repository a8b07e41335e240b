#include "tamecert/weights.hpp"

#include <algorithm>
#include <cmath>

#include "tamecert/errors.hpp"
#include "tamecert/structure.hpp"

namespace tamecert {

std::complex<double> WeightList::evaluate(std::size_t k, const std::vector<double>& x) const {
  std::complex<double> s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += values[k][i] * x[i];
  return s;
}

double WeightList::max_imaginary() const {
  double m = 0;
  for (const auto& row : values)
    for (const auto& z : row) m = std::max(m, std::abs(z.imag()));
  return m;
}

namespace {

/// Action of op on g / f in the coordinates of f's free columns.
Matrix quotient_action(const Matrix& op, const Subspace& f) {
  const auto free = f.free_columns();
  Matrix q(free.size(), free.size());
  for (std::size_t b = 0; b < free.size(); ++b) {
    const Vector w = f.reduce(op.col(free[b]));
    for (std::size_t a = 0; a < free.size(); ++a) q(a, b) = w[free[a]];
  }
  return q;
}

std::optional<AdjointWeights> exact_weights(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const Subspace derived = derived_algebra(g);
  std::vector<Matrix> derived_ops;
  for (const auto& x : derived.basis()) derived_ops.push_back(g.adjoint(x));

  AdjointWeights out;
  std::vector<Subspace> flag;
  std::vector<Vector> exact_rows;
  std::vector<Vector> generators;
  Subspace current(n);
  while (current.dim() < n) {
    const auto free = current.free_columns();
    const std::size_t d = free.size();
    // [g, g] acts nilpotently on g / F; its common kernel carries commuting operators.
    std::vector<Vector> rows;
    for (const auto& op : derived_ops) {
      const Matrix q = quotient_action(op, current);
      for (std::size_t r = 0; r < d; ++r) rows.push_back(q.row(r));
    }
    const Subspace u = rows.empty() ? Subspace::whole(d) : Subspace(d, kernel_basis(Matrix::from_rows(rows, d)));
    std::vector<Matrix> ops;
    for (std::size_t i = 0; i < n; ++i) ops.push_back(quotient_action(g.ad_basis(i), current));
    const auto leaves = detail::joint_rational_eigenspaces(ops, u, 1);
    if (leaves.empty()) return std::nullopt;
    const Vector& v = leaves.front().space.basis().front();
    Vector w = zero_vector(n);
    for (std::size_t a = 0; a < d; ++a) w[free[a]] = v[a];
    generators.push_back(w);
    exact_rows.push_back(leaves.front().eigenvalues);
    current = sum(current, Subspace::line(w));
    flag.push_back(current);
  }
  out.weights.exact = exact_rows;
  for (const auto& row : exact_rows) {
    std::vector<std::complex<double>> vals;
    for (const auto& x : row) vals.emplace_back(x.get_d(), 0.0);
    out.weights.values.push_back(std::move(vals));
  }
  out.flag = std::move(flag);
  out.flag_basis = Eigen::MatrixXcd(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t r = 0; r < n; ++r)
      out.flag_basis(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) = generators[k][r].get_d();
  return out;
}

using CMat = Eigen::MatrixXcd;

/// Orthonormal basis of the numerical null space of m.
CMat null_space(const CMat& m, double tol) {
  if (m.rows() == 0) return CMat::Identity(m.cols(), m.cols());
  Eigen::JacobiSVD<CMat> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double scale = std::max(1.0, s.size() ? s(0) : 0.0);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * scale) ++rank;
  return svd.matrixV().rightCols(m.cols() - rank);
}

AdjointWeights numeric_weights(const LieAlgebra& g) {
  const Eigen::Index n = static_cast<Eigen::Index>(g.dim());
  std::vector<CMat> ad;
  for (std::size_t i = 0; i < g.dim(); ++i) ad.push_back(to_eigen(g.ad_basis(i)).cast<std::complex<double>>());
  std::vector<CMat> derived_ops;
  const Subspace derived = derived_algebra(g);
  for (const auto& x : derived.basis()) derived_ops.push_back(to_eigen(g.adjoint(x)).cast<std::complex<double>>());

  AdjointWeights out;
  CMat flag(n, 0);
  for (Eigen::Index k = 0; k < n; ++k) {
    // Unitary completion [flag | complement]; the quotient action is complement^H A complement.
    CMat complement;
    if (k == 0) {
      complement = CMat::Identity(n, n);
    } else {
      Eigen::HouseholderQR<CMat> qr(flag);
      CMat full = qr.householderQ() * CMat::Identity(n, n);
      complement = full.rightCols(n - k);
    }
    const Eigen::Index d = n - k;
    CMat stacked(static_cast<Eigen::Index>(derived_ops.size()) * d, d);
    for (std::size_t j = 0; j < derived_ops.size(); ++j)
      stacked.middleRows(static_cast<Eigen::Index>(j) * d, d) = complement.adjoint() * derived_ops[j] * complement;
    CMat basis = null_space(stacked, 1e-9);
    std::vector<std::complex<double>> weight(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i) {
      const CMat local = basis.adjoint() * complement.adjoint() * ad[i] * complement * basis;
      if (local.rows() == 1) {
        weight[i] = local(0, 0);
        continue;
      }
      Eigen::ComplexEigenSolver<CMat> es(local);
      Eigen::Index pick = 0;
      for (Eigen::Index j = 1; j < es.eigenvalues().size(); ++j) {
        const auto a = es.eigenvalues()(j), b = es.eigenvalues()(pick);
        if (a.real() < b.real() - 1e-9 || (std::abs(a.real() - b.real()) <= 1e-9 && a.imag() < b.imag())) pick = j;
      }
      const std::complex<double> mu = es.eigenvalues()(pick);
      weight[i] = mu;
      CMat shifted = local - mu * CMat::Identity(local.rows(), local.cols());
      CMat kernel = null_space(shifted, 1e-6);
      if (kernel.cols() == 0) kernel = es.eigenvectors().col(pick).normalized();
      basis = basis * kernel;
    }
    Eigen::VectorXcd v = complement * basis.col(0);
    // Gram-Schmidt against the existing flag keeps the columns orthonormal.
    v -= flag * (flag.adjoint() * v);
    v.normalize();
    flag.conservativeResize(n, k + 1);
    flag.col(k) = v;
    out.weights.values.push_back(std::move(weight));
  }
  out.flag_basis = flag;
  return out;
}

}  // namespace

AdjointWeights adjoint_weights(const LieAlgebra& g) {
  if (!is_solvable(g)) throw NotSolvable();
  if (auto exact = exact_weights(g)) return std::move(*exact);
  return numeric_weights(g);
}

}  // namespace tamecert
