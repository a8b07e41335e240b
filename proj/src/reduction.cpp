#include "tamecert/reduction.hpp"

#include <algorithm>

#include "tamecert/errors.hpp"
#include "tamecert/structure.hpp"
#include "tamecert/taming.hpp"

namespace tamecert::reduction {

std::string TripleFlags::first_failure() const {
  if (!j_squared) return "J^2 = -I";
  if (!closed) return "closed";
  if (!integrable) return "integrable";
  if (!taming) return "taming";
  return {};
}

TripleFlags TamedTriple::verify(const LieAlgebra& g, const TwoForm& omega, const Matrix& J) {
  TripleFlags f;
  if (omega.dim() != g.dim() || J.rows() != g.dim() || J.cols() != g.dim())
    throw DimensionMismatch("triple components have mismatched dimensions");
  f.closed = forms::d(g, omega).is_zero();
  f.j_squared = g.dim() % 2 == 0 && forms::squares_to_minus_identity(J);
  if (f.j_squared) {
    const auto cs = ComplexStructure::create(J);
    f.integrable = forms::is_integrable(g, cs);
    f.taming = forms::is_taming(omega, cs).taming;
  }
  return f;
}

TamedTriple TamedTriple::create(LieAlgebra g, TwoForm omega, Matrix J) {
  const TripleFlags f = verify(g, omega, J);
  if (!f.all()) throw NotTamed("triple fails '" + f.first_failure() + "'");
  auto cs = ComplexStructure::create(std::move(J));
  return TamedTriple(std::move(g), std::move(omega), std::move(cs));
}

Subspace find_isotropic_ideal(const LieAlgebra& g) {
  const auto lines = one_dim_ideals(g);
  if (lines.empty()) throw NoOneDimIdeal();
  const Subspace derived = derived_algebra(g);
  for (const auto& l : lines)
    if (derived.contains(l)) return l;
  return lines.front();
}

PerpResult omega_perp(const LieAlgebra& g, const TwoForm& omega, const Subspace& h) {
  const std::size_t n = g.dim();
  if (h.ambient_dim() != n || omega.dim() != n) throw DimensionMismatch("perp inputs have mismatched dimensions");
  PerpResult out;
  // omega(v, w) = (W w) . v
  std::vector<Vector> rows;
  for (const auto& w : h.basis()) rows.push_back(omega.matrix() * w);
  out.perp = rows.empty() ? Subspace::whole(n) : Subspace(n, kernel_basis(Matrix::from_rows(rows, n)));
  out.h_is_ideal = is_ideal(g, h);
  out.perp_is_subalgebra = is_subalgebra(g, out.perp);
  return out;
}

DecompositionCheck check_decomposition(const LieAlgebra& g, const TwoForm& omega, const ComplexStructure& J,
                                       const Subspace& h) {
  const Subspace jh = image(J.matrix(), h);
  const Subspace perp = omega_perp(g, omega, h).perp;
  const Subspace meet = intersection(jh, perp);
  DecompositionCheck out;
  out.direct = meet.is_zero() && jh.dim() + perp.dim() == g.dim();
  if (!meet.is_zero()) out.witness = meet.basis().front();
  return out;
}

namespace {

std::vector<std::string> section_labels(const LieAlgebra& g, const Subspace& s) {
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < s.dim(); ++a) {
    const auto& v = s.basis()[a];
    const bool unit = std::count_if(v.begin(), v.end(), [](const Scalar& x) { return x != 0; }) == 1;
    labels.push_back(unit ? g.labels()[s.pivots()[a]] : "v" + std::to_string(a + 1));
  }
  return labels;
}

}  // namespace

ReductionStep reduce(const TamedTriple& t, const Subspace& h) {
  const LieAlgebra& g = t.algebra();
  const TwoForm& omega = t.omega();
  const ComplexStructure& J = t.J();
  const std::size_t n = g.dim();
  if (h.ambient_dim() != n) throw DimensionMismatch("ideal does not live in the algebra");
  if (h.dim() != 1) throw DimensionMismatch("reduction uses one-dimensional ideals only");
  if (!is_ideal(g, h)) throw NotAnIdeal("reduction requires an ideal");
  for (const auto& a : h.basis())
    for (const auto& b : h.basis())
      if (omega(a, b) != 0) throw NotIsotropic("ideal is not isotropic");

  const Vector& x = h.basis().front();
  const std::size_t pivot = h.pivots().front();
  const Vector jx = J(x);
  const Scalar sigma = omega(jx, x);
  if (sigma == 0) throw TamingLost("taming", "omega(JX, X) = 0 on the input triple");

  const PerpResult perp = omega_perp(g, omega, h);
  if (!perp.perp_is_subalgebra) throw TamingLost("subalgebra", "perp of an ideal is not a subalgebra");

  std::vector<Vector> off_pivot;
  for (std::size_t i = 0; i < n; ++i)
    if (i != pivot) off_pivot.push_back(unit_vector(n, i));
  const Subspace section = intersection(perp.perp, Subspace(n, off_pivot));
  const std::size_t m = section.dim();
  if (m + 2 != n) throw TamingLost("dimension", "perp has unexpected dimension");

  // w in perp  ->  coordinates of w - w[pivot] X against the section basis.
  auto to_reduced = [&](const Vector& w) {
    Vector r(w);
    axpy(r, -w[pivot], x);
    return section.coordinates(r);
  };
  const auto& s = section.basis();

  std::vector<Scalar> constants(m * m * m, Scalar(0));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      const Vector w = to_reduced(g.bracket(s[a], s[b]));
      for (std::size_t k = 0; k < m; ++k) constants[(a * m + b) * m + k] = w[k];
    }

  TwoForm reduced_omega(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) reduced_omega.set(a, b, omega(s[a], s[b]));

  Matrix reduced_j(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    Vector y(s[a]);
    axpy(y, -omega(J(s[a]), x) / sigma, x);
    const Vector jy = J(y);
    if (!perp.perp.contains(jy)) throw TamingLost("J", "corrected representative leaves the perp");
    const Vector c = to_reduced(jy);
    for (std::size_t k = 0; k < m; ++k) reduced_j(k, a) = c[k];
  }

  LieAlgebra reduced_g;
  try {
    reduced_g = LieAlgebra::from_tensor(section_labels(g, section), std::move(constants));
  } catch (const JacobiViolation& e) {
    throw TamingLost("jacobi", e.what());
  }
  const TripleFlags flags = TamedTriple::verify(reduced_g, reduced_omega, reduced_j);
  if (!flags.all()) throw TamingLost(flags.first_failure(), "reduced triple failed verification");

  return ReductionStep{h,
                       x,
                       perp.perp,
                       jx,
                       TamedTriple::create(std::move(reduced_g), std::move(reduced_omega), std::move(reduced_j)),
                       section.basis_matrix()};
}

ReductionTower reduction_tower(const TamedTriple& t) {
  ReductionTower tower;
  const TamedTriple* current = &t;
  while (current->dim() > 0) {
    Subspace h;
    try {
      h = find_isotropic_ideal(*current);
    } catch (const NoOneDimIdeal&) {
      break;
    }
    tower.steps.push_back(reduce(*current, h));
    current = &tower.steps.back().reduced;
  }
  tower.terminal = current->algebra();
  tower.complete = current->dim() == 0;
  return tower;
}

}  // namespace tamecert::reduction
