#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tamecert/reduction.hpp"

namespace tamecert::pipeline {

/// Residuals of the four bracket relations for one Y in v.
struct RelationResiduals {
  Vector x_y;    // [X, Y] - a X
  Vector x_jy;   // [X, JY] - b X
  Vector jx_y;   // [JX, Y] + 2b X + a JX - Z1
  Vector jx_jy;  // [JX, JY] - 2a X + b JX - J Z1
  bool all_zero() const;
};

struct FrameEntry {
  Vector y;
  Scalar a;
  Scalar b;
  Vector z1;
  RelationResiduals residuals;
  /// Trace of ad_Y compressed to v; checked on unimodular algebras.
  Scalar trace_on_v;
};

/// Exact frame computation around an isotropic line ideal span(X) of a tamed triple.
/// v = {Y : w(Y, X) = 0 and w(JY, X) = 0} is J-invariant and g = span(X, JX) ⊕ v;
/// for Y in v with a = w([X, Y], JX) / w(X, JX) and b = w([X, JY], JX) / w(X, JX):
///   [X, Y] = a X,  [X, JY] = b X,
///   [JX, Y] = -2b X - a JX + Z1,  [JX, JY] = 2a X - b JX + J Z1,  Z1 in v.
struct ProofTraceRecord {
  Vector x;
  Vector jx;
  /// w(X, JX), positive for a taming form.
  Scalar sigma;
  /// [X, JX] = h X.
  std::optional<Scalar> h_scalar;
  Subspace v;
  std::vector<FrameEntry> entries;
  bool unimodular = false;
  bool reduced_unimodular = false;
};

/// Uses find_isotropic_ideal for the line. Throws RelationViolation on any nonzero residual,
/// a non-invariant v, a nonzero trace on v (unimodular input), or a non-unimodular reduction
/// of a unimodular algebra.
ProofTraceRecord proof_trace(const reduction::TamedTriple& t);
ProofTraceRecord proof_trace(const reduction::TamedTriple& t, const Subspace& h);

/// Same computation without throwing.
ProofTraceRecord compute_proof_trace(const reduction::TamedTriple& t, const Subspace& h);

}  // namespace tamecert::pipeline
