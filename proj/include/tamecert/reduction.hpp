#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tamecert/complex_structure.hpp"
#include "tamecert/forms.hpp"
#include "tamecert/subspace.hpp"

namespace tamecert::reduction {

using forms::ComplexStructure;
using forms::TwoForm;

struct TripleFlags {
  bool closed = false;
  bool j_squared = false;
  bool integrable = false;
  bool taming = false;

  bool all() const { return closed && j_squared && integrable && taming; }
  /// Name of the first failing flag, or empty.
  std::string first_failure() const;
};

/// Lie algebra with a closed 2-form taming an integrable complex structure. All four
/// properties are verified exactly at construction.
class TamedTriple {
 public:
  /// Throws NotTamed naming the first failing property.
  static TamedTriple create(LieAlgebra g, TwoForm omega, Matrix J);
  static TripleFlags verify(const LieAlgebra& g, const TwoForm& omega, const Matrix& J);

  const LieAlgebra& algebra() const { return g_; }
  const TwoForm& omega() const { return omega_; }
  const ComplexStructure& J() const { return j_; }
  std::size_t dim() const { return g_.dim(); }

 private:
  TamedTriple(LieAlgebra g, TwoForm omega, ComplexStructure J)
      : g_(std::move(g)), omega_(std::move(omega)), j_(std::move(J)) {}

  LieAlgebra g_;
  TwoForm omega_;
  ComplexStructure j_;
};

/// First line of one_dim_ideals lying in [g, g], else the first line overall. Lines are
/// isotropic for any alternating form. Throws NoOneDimIdeal.
Subspace find_isotropic_ideal(const LieAlgebra& g);
inline Subspace find_isotropic_ideal(const TamedTriple& t) { return find_isotropic_ideal(t.algebra()); }

struct PerpResult {
  Subspace perp;
  bool h_is_ideal = false;
  /// Checked whenever h is an ideal (then it must hold).
  bool perp_is_subalgebra = false;
};

/// {v : omega(v, w) = 0 for all w in h}.
PerpResult omega_perp(const LieAlgebra& g, const TwoForm& omega, const Subspace& h);
inline PerpResult omega_perp(const TamedTriple& t, const Subspace& h) { return omega_perp(t.algebra(), t.omega(), h); }

struct DecompositionCheck {
  bool direct = false;
  /// Nonzero vector of J h ∩ h^perp when the sum is not direct.
  std::optional<Vector> witness;
};

/// Whether g = J h ⊕ h^perp.
DecompositionCheck check_decomposition(const LieAlgebra& g, const TwoForm& omega, const ComplexStructure& J,
                                       const Subspace& h);
inline DecompositionCheck check_decomposition(const TamedTriple& t, const Subspace& h) {
  return check_decomposition(t.algebra(), t.omega(), t.J(), h);
}

struct ReductionStep {
  Subspace h;
  Vector generator;
  Subspace perp;
  /// J X, the complement of h^perp.
  Vector complement_witness;
  TamedTriple reduced;
  /// n x (n - 2); column a is the representative in h^perp of the a-th reduced basis vector.
  Matrix section_map;
};

/// Tamed reduction to h^perp / h along a one-dimensional ideal h = span(X). Representatives
/// live in the echelon complement of X inside h^perp; the induced complex structure maps
/// Y + h to J(Y - (w(JY, X) / w(JX, X)) X) + h. The result is re-verified and TamingLost is
/// thrown if any property fails.
ReductionStep reduce(const TamedTriple& t, const Subspace& h);

struct ReductionTower {
  std::vector<ReductionStep> steps;
  LieAlgebra terminal;
  /// The terminal algebra has dimension 0.
  bool complete = false;
};

/// Repeats find_isotropic_ideal + reduce until dimension 0 or no rational line ideal remains.
ReductionTower reduction_tower(const TamedTriple& t);

}  // namespace tamecert::reduction
