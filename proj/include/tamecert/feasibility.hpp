#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tamecert/complex_structure.hpp"
#include "tamecert/forms.hpp"

namespace tamecert::feasibility {

struct Tolerances {
  double eps_feas = 1e-7;
  double eps_dual = 1e-8;
};

struct Budget {
  std::size_t restarts = 50;
  std::size_t iterations = 5000;
};

struct Config {
  Tolerances tolerances;
  Budget budget;
  std::uint64_t seed = 0;
};

struct FeasibilityProblem {
  LieAlgebra algebra;
  forms::ComplexStructure J;
  bool j_integrable = true;
  std::vector<forms::TwoForm> z2_basis;
  /// S_i = taming_gram(z2_basis[i], J), exact and as doubles.
  std::vector<Matrix> gram_basis;
  std::vector<Eigen::MatrixXd> gram_numeric;
  Tolerances tolerances;
  Budget budget;
  std::uint64_t rng_seed = 0;

  std::size_t dim() const { return algebra.dim(); }
};

/// Throws DimensionMismatch when J does not act on g. A non-integrable J is accepted and
/// recorded in j_integrable.
FeasibilityProblem build_problem(const LieAlgebra& g, const forms::ComplexStructure& J, const Config& config = {});

enum class DegeneracySource { derived_algebra, nilradical_center, generalized_eigenspace };

std::string to_string(DegeneracySource source);

/// v with v^T S_i v = 0 exactly for every Gram matrix: Omega(v, Jv) = 0 for all closed Omega.
struct DegeneracyDirection {
  Vector v;
  DegeneracySource source = DegeneracySource::derived_algebra;
};

std::optional<DegeneracyDirection> degeneracy_precheck(const FeasibilityProblem& p);

/// Exact check of the rank-one condition for v.
bool is_universally_degenerate(const FeasibilityProblem& p, const Vector& v);

struct AscentResult {
  Eigen::VectorXd c;
  double value = 0;
  std::size_t restart = 0;
};

/// lambda_min(sum c_i S_i) and a unit eigenvector for it.
double lambda_min(const FeasibilityProblem& p, const Eigen::VectorXd& c, Eigen::VectorXd* eigenvector = nullptr);

/// Projected supergradient ascent of lambda_min(sum c_i S_i) over the unit ball,
/// multi-start from seeded random points of the sphere.
AscentResult maximize_lambda_min(const FeasibilityProblem& p);

struct DualResult {
  Eigen::MatrixXd P;
  double residual = 0;
  std::size_t iterations = 0;
};

/// Alternating projections between {P : <S_i, P> = 0, tr P = 1} and the PSD cone. The
/// returned P lies in the affine set; success iff residual < eps_dual.
std::optional<DualResult> dual_certificate(const FeasibilityProblem& p, std::size_t max_iterations = 20000,
                                           DualResult* last = nullptr);

/// Rounds c to rationals with growing denominators until the Gram of sum q_i B_i is
/// exactly positive definite. Throws ExactificationFailed.
forms::TwoForm exactify(const FeasibilityProblem& p, const Eigen::VectorXd& c);

struct Feasible {
  forms::TwoForm omega;
  double lambda_min = 0;
  bool exact_pd = false;
};

struct Infeasible {
  Eigen::MatrixXd dual;
  double residual = 0;
  std::optional<DegeneracyDirection> rank_one_direction;
  double best_primal = 0;
};

struct Unknown {
  double best_lambda_min = 0;
  double dual_residual = 0;
};

using Verdict = std::variant<Feasible, Infeasible, Unknown>;

std::string verdict_kind(const Verdict& v);

/// Precheck, primal ascent, then exactification or a dual certificate.
Verdict decide(const FeasibilityProblem& p);
Verdict decide(const LieAlgebra& g, const forms::ComplexStructure& J, const Config& config = {});

}  // namespace tamecert::feasibility
