#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <vector>

#include "tamecert/lie_algebra.hpp"
#include "tamecert/subspace.hpp"

namespace tamecert {

/// Diagonal weights of a triangularised adjoint representation: values[k][i] = lambda_k(e_i).
struct WeightList {
  std::vector<std::vector<std::complex<double>>> values;
  /// Exact rational weight rows, present when every weight is rational.
  std::optional<std::vector<Vector>> exact;

  std::size_t size() const { return values.size(); }
  std::complex<double> evaluate(std::size_t k, const std::vector<double>& x) const;
  /// Largest |Im lambda_k(e_i)|.
  double max_imaginary() const;
};

struct AdjointWeights {
  WeightList weights;
  /// F_1 ⊂ F_2 ⊂ ... ⊂ F_n, each an ideal; present when computed exactly.
  std::optional<std::vector<Subspace>> flag;
  /// Column k spans F_{k+1} modulo F_k (complex; real when exact).
  Eigen::MatrixXcd flag_basis;
};

/// Flag of ad-invariant subspaces with its weights, by iterated common-eigenvector
/// extraction on g / F_k. Exact over Q when all weights are rational, otherwise computed
/// in complex floating point. Throws NotSolvable.
AdjointWeights adjoint_weights(const LieAlgebra& g);

}  // namespace tamecert
