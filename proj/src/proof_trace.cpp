#include "tamecert/proof_trace.hpp"

#include "tamecert/errors.hpp"
#include "tamecert/structure.hpp"

namespace tamecert::pipeline {

bool RelationResiduals::all_zero() const {
  return is_zero(x_y) && is_zero(x_jy) && is_zero(jx_y) && is_zero(jx_jy);
}

namespace {

/// Coordinates (alpha, beta, z) of u = alpha X + beta JX + z with z in v.
struct Split {
  Scalar alpha;
  Scalar beta;
  Vector z;
};

class Frame {
 public:
  Frame(const Vector& x, const Vector& jx, const Subspace& v) : n_(x.size()) {
    std::vector<Vector> cols{x, jx};
    for (const auto& b : v.basis()) cols.push_back(b);
    inverse_ = *inverse(Matrix::from_columns(cols, n_));
    v_ = v;
  }

  Split split(const Vector& u) const {
    const Vector c = inverse_ * u;
    Split s{c[0], c[1], zero_vector(n_)};
    for (std::size_t k = 0; k < v_.dim(); ++k) axpy(s.z, c[k + 2], v_.basis()[k]);
    return s;
  }

  /// Coordinate of u along the k-th basis vector of v.
  Scalar v_coordinate(const Vector& u, std::size_t k) const { return (inverse_ * u)[k + 2]; }

 private:
  std::size_t n_;
  Matrix inverse_;
  Subspace v_;
};

}  // namespace

ProofTraceRecord compute_proof_trace(const reduction::TamedTriple& t, const Subspace& h) {
  const auto& g = t.algebra();
  const auto& w = t.omega();
  const auto& J = t.J();
  const std::size_t n = g.dim();
  if (h.dim() != 1 || h.ambient_dim() != n) throw DimensionMismatch("proof trace needs a line in the algebra");
  if (!is_ideal(g, h)) throw NotAnIdeal("proof trace needs an ideal");

  ProofTraceRecord r;
  r.x = h.basis().front();
  r.jx = J(r.x);
  r.sigma = w(r.x, r.jx);
  if (r.sigma == 0) throw NotTamed("w(X, JX) = 0");

  const Vector wx = w.matrix() * r.x;
  const Vector jtwx = J.matrix().transpose() * wx;
  r.v = Subspace(n, kernel_basis(Matrix::from_rows({wx, jtwx}, n)));

  const Vector xjx = g.bracket(r.x, r.jx);
  const Subspace line = Subspace::line(r.x);
  if (line.contains(xjx)) r.h_scalar = line.coordinates(xjx)[0];

  r.unimodular = is_unimodular(g).unimodular;
  const Frame frame(r.x, r.jx, r.v);
  for (const auto& y : r.v.basis()) {
    FrameEntry e;
    e.y = y;
    const Vector jy = J(y);
    const Vector xy = g.bracket(r.x, y), xjy = g.bracket(r.x, jy);
    const Vector jxy = g.bracket(r.jx, y), jxjy = g.bracket(r.jx, jy);
    e.a = w(xy, r.jx) / r.sigma;
    e.b = w(xjy, r.jx) / r.sigma;
    const Split s = frame.split(jxy);
    e.z1 = s.z;
    e.residuals.x_y = xy - e.a * r.x;
    e.residuals.x_jy = xjy - e.b * r.x;
    e.residuals.jx_y = (s.alpha + 2 * e.b) * r.x + (s.beta + e.a) * r.jx;
    e.residuals.jx_jy = jxjy - (2 * e.a) * r.x + e.b * r.jx - J(e.z1);
    e.trace_on_v = 0;
    for (std::size_t k = 0; k < r.v.dim(); ++k) e.trace_on_v += frame.v_coordinate(g.bracket(y, r.v.basis()[k]), k);
    r.entries.push_back(std::move(e));
  }

  const auto step = reduction::reduce(t, h);
  r.reduced_unimodular = is_unimodular(step.reduced.algebra()).unimodular;
  return r;
}

ProofTraceRecord proof_trace(const reduction::TamedTriple& t, const Subspace& h) {
  ProofTraceRecord r = compute_proof_trace(t, h);
  const auto& J = t.J();
  for (const auto& y : r.v.basis())
    if (!r.v.contains(J(y))) throw RelationViolation("J v = v", y, r.v.reduce(J(y)));
  for (const auto& e : r.entries) {
    if (!is_zero(e.residuals.x_y)) throw RelationViolation("[X,Y]=aX", e.y, e.residuals.x_y);
    if (!is_zero(e.residuals.x_jy)) throw RelationViolation("[X,JY]=bX", e.y, e.residuals.x_jy);
    if (!is_zero(e.residuals.jx_y)) throw RelationViolation("[JX,Y]=-2bX-aJX+Z1", e.y, e.residuals.jx_y);
    if (!is_zero(e.residuals.jx_jy)) throw RelationViolation("[JX,JY]=2aX-bJX+JZ1", e.y, e.residuals.jx_jy);
    if (r.unimodular && e.trace_on_v != 0) throw RelationViolation("trace(ad_Y|v)=0", e.y, Vector{e.trace_on_v});
  }
  if (r.unimodular && !r.reduced_unimodular) throw RelationViolation("reduced algebra unimodular", r.x, Vector{});
  return r;
}

ProofTraceRecord proof_trace(const reduction::TamedTriple& t) { return proof_trace(t, reduction::find_isotropic_ideal(t)); }

}  // namespace tamecert::pipeline
