#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "tamecert/lie_algebra.hpp"
#include "tamecert/subspace.hpp"

namespace tamecert {

struct UnimodularCheck {
  bool unimodular = true;
  /// First basis vector with trace(ad) != 0.
  std::optional<std::size_t> witness;
  Scalar witness_trace = 0;
};

UnimodularCheck is_unimodular(const LieAlgebra& g);

/// span{[a, b] : a in s, b in t}.
Subspace bracket_span(const LieAlgebra& g, const Subspace& s, const Subspace& t);
Subspace derived_algebra(const LieAlgebra& g);

/// g = D0 ⊋ D1 ⊋ ... until the series stabilises; ends with 0 iff g is solvable.
std::vector<Subspace> derived_series(const LieAlgebra& g);
/// g = C0 ⊋ C1 = [g, C0] ⊋ ... until the series stabilises.
std::vector<Subspace> lower_central_series(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);

Subspace center(const LieAlgebra& g);
/// {v : [x, v] = 0 for all x in s}.
Subspace centralizer(const LieAlgebra& g, const Subspace& s);
bool is_ideal(const LieAlgebra& g, const Subspace& s);
bool is_subalgebra(const LieAlgebra& g, const Subspace& s);

/// Matrix of op restricted to the invariant subspace s, in the coordinates of s.basis().
Matrix restrict_to(const Matrix& op, const Subspace& s);

struct CompleteSolvability {
  bool solvable = false;
  bool completely_solvable = false;
  /// Basis vector whose adjoint has a non-real eigenvalue, and that eigenvalue.
  std::optional<std::size_t> witness;
  std::complex<double> witness_eigenvalue{};
};

/// Decided exactly: g solvable and each ad_{e_i} has a real-rooted characteristic
/// polynomial (Sturm count). Checking basis vectors suffices because the adjoint
/// weights are linear.
CompleteSolvability is_completely_solvable(const LieAlgebra& g);

/// Largest nilpotent ideal of a solvable algebra: the x with ad_x nilpotent. Computed
/// as the common kernel of x -> tr(ad_x M) for M in the associative algebra generated
/// by the adjoint operators. Throws NotSolvable.
Subspace nilradical(const LieAlgebra& g);

/// Rational lines L with [g, L] ⊆ L. Every such line lies in a joint eigenspace of the
/// adjoint action on the centralizer of [g, g]; the result lists the echelon basis lines
/// of each joint eigenspace, sorted by echelon_less.
std::vector<Subspace> one_dim_ideals(const LieAlgebra& g);

/// g / h with basis the echelon complement of h. Throws NotAnIdeal.
LieAlgebra quotient(const LieAlgebra& g, const Subspace& h);
/// s with basis s.basis(). Throws NotASubalgebra.
LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& s);

namespace detail {

/// A joint eigenspace of a commuting family, with the eigenvalue of each operator.
struct JointEigenspace {
  std::vector<Scalar> eigenvalues;
  Subspace space;
};

/// Splits the invariant subspace s into joint rational eigenspaces of ops (which must
/// commute on s). Stops after max_leaves results when max_leaves > 0.
std::vector<JointEigenspace> joint_rational_eigenspaces(const std::vector<Matrix>& ops, const Subspace& s,
                                                        std::size_t max_leaves = 0);

}  // namespace detail

}  // namespace tamecert
