#include "tamecert/taming.hpp"

#include <Eigen/Eigenvalues>

#include <limits>

#include "tamecert/errors.hpp"

namespace tamecert::forms {

TamingGram taming_gram(const TwoForm& w, const ComplexStructure& J) {
  if (w.dim() != J.dim()) throw DimensionMismatch("form and J dimensions differ");
  // w(X, JY) = X^T W J Y, so G = 1/2 (W J + (W J)^T).
  const Matrix wj = w.matrix() * J.matrix();
  return {Scalar(1, 2) * (wj + wj.transpose())};
}

double smallest_eigenvalue(const Matrix& symmetric) {
  if (symmetric.rows() == 0) return std::numeric_limits<double>::infinity();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(symmetric), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

TamingCheck is_taming(const TwoForm& w, const ComplexStructure& J, TamingMode mode, double tolerance) {
  const TamingGram g = taming_gram(w, J);
  TamingCheck out;
  out.margin = smallest_eigenvalue(g.gram);
  out.taming = mode == TamingMode::exact ? is_positive_definite(g.gram) : out.margin > tolerance;
  return out;
}

bool is_nondegenerate(const TwoForm& w) { return determinant(w.matrix()) != 0; }

namespace {

Scalar pfaffian_rec(const Matrix& m, std::vector<std::size_t>& idx) {
  if (idx.empty()) return 1;
  const std::size_t first = idx.front();
  Scalar total = 0;
  for (std::size_t k = 1; k < idx.size(); ++k) {
    const Scalar& a = m(first, idx[k]);
    if (a == 0) continue;
    std::vector<std::size_t> rest;
    for (std::size_t t = 1; t < idx.size(); ++t)
      if (t != k) rest.push_back(idx[t]);
    const Scalar sub = pfaffian_rec(m, rest);
    if (k % 2 == 1)
      total += a * sub;
    else
      total -= a * sub;
  }
  return total;
}

}  // namespace

Scalar pfaffian(const TwoForm& w) {
  if (w.dim() % 2 != 0) throw OddDimension("Pfaffian requires an even dimension");
  std::vector<std::size_t> idx(w.dim());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return pfaffian_rec(w.matrix(), idx);
}

bool is_compatible(const TwoForm& w, const ComplexStructure& J) {
  const Matrix& jm = J.matrix();
  if (!(jm.transpose() * w.matrix() * jm == w.matrix())) return false;
  return is_taming(w, J).taming;
}

}  // namespace tamecert::forms
