#include "tamecert/feasibility.hpp"
#include <limits>

namespace tamecert::feasibility {

namespace {

Eigen::MatrixXd psd_projection(const Eigen::MatrixXd& x) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(x);
  const Eigen::VectorXd clipped = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().transpose();
}

/// Least-squares projection onto {x : A x = b} with A of full or deficient row rank.
class AffineProjector {
 public:
  AffineProjector(Eigen::MatrixXd a, Eigen::VectorXd b) : a_(std::move(a)), b_(std::move(b)) {
    const Eigen::MatrixXd gram = a_ * a_.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
    const double cutoff = 1e-12 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    Eigen::VectorXd inv = es.eigenvalues();
    for (Eigen::Index i = 0; i < inv.size(); ++i) inv(i) = std::abs(inv(i)) > cutoff ? 1.0 / inv(i) : 0.0;
    pinv_ = es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
  }

  Eigen::VectorXd operator()(const Eigen::VectorXd& x) const { return x - a_.transpose() * (pinv_ * (a_ * x - b_)); }

  double violation(const Eigen::VectorXd& x) const { return (a_ * x - b_).norm(); }

 private:
  Eigen::MatrixXd a_;
  Eigen::VectorXd b_;
  Eigen::MatrixXd pinv_;
};

}  // namespace

std::optional<DualResult> dual_certificate(const FeasibilityProblem& p, std::size_t max_iterations, DualResult* last) {
  const auto n = static_cast<Eigen::Index>(p.dim());
  const auto m = static_cast<Eigen::Index>(p.gram_numeric.size());
  Eigen::MatrixXd a(m + 1, n * n);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(m + 1);
  for (Eigen::Index i = 0; i < m; ++i)
    a.row(i) = Eigen::Map<const Eigen::VectorXd>(p.gram_numeric[static_cast<std::size_t>(i)].data(), n * n).transpose();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  a.row(m) = Eigen::Map<const Eigen::VectorXd>(id.data(), n * n).transpose();
  b(m) = 1.0;
  const AffineProjector affine(a, b);

  Eigen::MatrixXd y = id / static_cast<double>(n);
  DualResult result{y, std::numeric_limits<double>::infinity(), 0};
  // An empty affine set (the identity lies in the span of the Grams) admits no certificate.
  if (const double gap = affine.violation(affine(Eigen::VectorXd::Zero(n * n))); gap > 1e-9) {
    result.residual = gap;
    if (last) *last = result;
    return std::nullopt;
  }
  for (std::size_t t = 0; t < max_iterations; ++t) {
    Eigen::MatrixXd x = Eigen::Map<const Eigen::MatrixXd>(affine(Eigen::Map<const Eigen::VectorXd>(y.data(), n * n)).data(), n, n);
    x = 0.5 * (x + x.transpose());
    const Eigen::MatrixXd z = psd_projection(x);
    const double residual = (x - z).norm();
    result = {x, residual, t + 1};
    if (residual < p.tolerances.eps_dual) {
      if (last) *last = result;
      return result;
    }
    y = z;
  }
  if (last) *last = result;
  return std::nullopt;
}

}  // namespace tamecert::feasibility
