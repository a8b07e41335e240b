#pragma once

#include "tamecert/complex_structure.hpp"
#include "tamecert/forms.hpp"

namespace tamecert::forms {

/// Symmetric form G(X, Y) = 1/2 (w(X, JY) + w(Y, JX)); G(X, X) = w(X, JX).
struct TamingGram {
  Matrix gram;
};

TamingGram taming_gram(const TwoForm& w, const ComplexStructure& J);

enum class TamingMode { exact, numeric };

struct TamingCheck {
  bool taming = false;
  /// Smallest eigenvalue of the Gram matrix (+inf in dimension 0).
  double margin = 0;
};

/// Taming iff the Gram matrix is positive definite: leading principal minors in exact
/// mode, smallest eigenvalue above tolerance in numeric mode.
TamingCheck is_taming(const TwoForm& w, const ComplexStructure& J, TamingMode mode = TamingMode::exact,
                      double tolerance = 1e-9);

bool is_nondegenerate(const TwoForm& w);
/// Throws OddDimension.
Scalar pfaffian(const TwoForm& w);
/// w(JX, JY) = w(X, Y) on all basis pairs, and w tames J.
bool is_compatible(const TwoForm& w, const ComplexStructure& J);

double smallest_eigenvalue(const Matrix& symmetric);

}  // namespace tamecert::forms
