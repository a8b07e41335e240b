#include "tamecert/feasibility.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "tamecert/errors.hpp"
#include "tamecert/taming.hpp"

namespace tamecert::feasibility {

FeasibilityProblem build_problem(const LieAlgebra& g, const forms::ComplexStructure& J, const Config& config) {
  if (g.dim() == 0) throw DimensionMismatch("feasibility needs a nonzero algebra");
  if (J.dim() != g.dim())
    throw DimensionMismatch("J acts on dimension " + std::to_string(J.dim()) + ", algebra has " +
                            std::to_string(g.dim()));
  FeasibilityProblem p;
  p.algebra = g;
  p.J = J;
  p.j_integrable = forms::is_integrable(g, J);
  p.z2_basis = forms::closed_two_forms(g);
  for (const auto& b : p.z2_basis) {
    p.gram_basis.push_back(forms::taming_gram(b, J).gram);
    p.gram_numeric.push_back(to_eigen(p.gram_basis.back()));
  }
  p.tolerances = config.tolerances;
  p.budget = config.budget;
  p.rng_seed = config.seed;
  return p;
}

double lambda_min(const FeasibilityProblem& p, const Eigen::VectorXd& c, Eigen::VectorXd* eigenvector) {
  const auto n = static_cast<Eigen::Index>(p.dim());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < p.gram_numeric.size(); ++i) m += c(static_cast<Eigen::Index>(i)) * p.gram_numeric[i];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, eigenvector ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (eigenvector) *eigenvector = es.eigenvectors().col(0);
  return es.eigenvalues()(0);
}

namespace {

constexpr std::size_t kStallWindow = 250;
constexpr double kStallTolerance = 1e-6;

AscentResult ascend(const FeasibilityProblem& p, std::size_t restart) {
  const auto m = static_cast<Eigen::Index>(p.gram_numeric.size());
  std::seed_seq seq{static_cast<std::uint32_t>(p.rng_seed), static_cast<std::uint32_t>(p.rng_seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, 1.0);

  Eigen::VectorXd c(m);
  do {
    for (Eigen::Index i = 0; i < m; ++i) c(i) = normal(rng);
  } while (c.norm() == 0.0);
  c.normalize();

  AscentResult best{c, lambda_min(p, c), restart};
  double checkpoint = best.value;
  const auto n = static_cast<Eigen::Index>(p.dim());
  Eigen::VectorXd grad(m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(n);
  Eigen::MatrixXd sum(n, n);
  for (std::size_t t = 0; t < p.budget.iterations; ++t) {
    sum.setZero();
    for (Eigen::Index i = 0; i < m; ++i) sum += c(i) * p.gram_numeric[static_cast<std::size_t>(i)];
    es.compute(sum);
    const double value = es.eigenvalues()(0);
    if (value > best.value) best = {c, value, restart};
    const double step = 0.5 / std::sqrt(static_cast<double>(t) + 1.0);
    // Average u u^T over the eigenvalues within a step-sized band of the minimum.
    Eigen::Index cluster = 1;
    while (cluster < n && es.eigenvalues()(cluster) - value <= step) ++cluster;
    const auto u = es.eigenvectors().leftCols(cluster);
    for (Eigen::Index i = 0; i < m; ++i)
      grad(i) = (u.transpose() * p.gram_numeric[static_cast<std::size_t>(i)] * u).trace() / static_cast<double>(cluster);
    const double gnorm = grad.norm();
    if (gnorm == 0.0) break;
    c += step * grad / gnorm;
    if (const double cn = c.norm(); cn > 1.0) c /= cn;
    if ((t + 1) % kStallWindow == 0) {
      if (best.value - checkpoint <= kStallTolerance * std::max(1.0, std::abs(best.value))) break;
      checkpoint = best.value;
    }
  }
  const double last = lambda_min(p, c);
  if (last > best.value) best = {c, last, restart};
  return best;
}

}  // namespace

AscentResult maximize_lambda_min(const FeasibilityProblem& p) {
  if (p.gram_numeric.empty()) return {Eigen::VectorXd(0), 0.0, 0};
  AscentResult best{Eigen::VectorXd(0), -std::numeric_limits<double>::infinity(), 0};
  const std::size_t restarts = std::max<std::size_t>(1, p.budget.restarts);
  for (std::size_t r = 0; r < restarts; ++r) {
    AscentResult res = ascend(p, r);
    if (res.value > best.value) best = std::move(res);
  }
  return best;
}

forms::TwoForm exactify(const FeasibilityProblem& p, const Eigen::VectorXd& c) {
  if (static_cast<std::size_t>(c.size()) != p.z2_basis.size())
    throw DimensionMismatch("coefficient vector does not match the closed-form basis");
  const double scale = c.size() ? c.cwiseAbs().maxCoeff() : 0.0;
  if (!(scale > 0.0) || !std::isfinite(scale)) throw ExactificationFailed("zero coefficient vector");

  std::vector<mpz_class> denominators{1, 2};
  for (mpz_class d = 10; d <= 1000000; d *= 10) denominators.push_back(d);
  for (mpz_class d = 100000000; d <= mpz_class("1000000000000"); d *= 100) denominators.push_back(d);

  for (const auto& bound : denominators) {
    forms::TwoForm omega(p.dim());
    for (std::size_t i = 0; i < p.z2_basis.size(); ++i) {
      const Scalar q = limit_denominator(from_double(c(static_cast<Eigen::Index>(i)) / scale), bound);
      if (q != 0) omega = omega + q * p.z2_basis[i];
    }
    if (forms::is_taming(omega, p.J).taming) return omega;
  }
  throw ExactificationFailed("no rounding with denominator up to 10^12 is exactly taming");
}

std::string verdict_kind(const Verdict& v) {
  switch (v.index()) {
    case 0: return "Feasible";
    case 1: return "Infeasible";
    default: return "Unknown";
  }
}

Verdict decide(const FeasibilityProblem& p) {
  const auto direction = degeneracy_precheck(p);
  const AscentResult primal = maximize_lambda_min(p);

  if (primal.value > p.tolerances.eps_feas) {
    try {
      return Feasible{exactify(p, primal.c), primal.value, true};
    } catch (const ExactificationFailed&) {
      forms::TwoForm omega(p.dim());
      for (std::size_t i = 0; i < p.z2_basis.size(); ++i)
        omega = omega + from_double(primal.c(static_cast<Eigen::Index>(i))) * p.z2_basis[i];
      return Feasible{omega, primal.value, false};
    }
  }

  if (direction) {
    const Eigen::VectorXd v = to_eigen(direction->v);
    return Infeasible{v * v.transpose() / v.squaredNorm(), 0.0, direction, primal.value};
  }

  DualResult last;
  if (auto dual = dual_certificate(p, 20000, &last)) return Infeasible{dual->P, dual->residual, std::nullopt, primal.value};
  return Unknown{primal.value, last.residual};
}

Verdict decide(const LieAlgebra& g, const forms::ComplexStructure& J, const Config& config) {
  return decide(build_problem(g, J, config));
}

}  // namespace tamecert::feasibility
