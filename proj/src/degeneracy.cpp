#include "tamecert/feasibility.hpp"

#include "tamecert/errors.hpp"
#include "tamecert/polynomial.hpp"
#include "tamecert/structure.hpp"

namespace tamecert::feasibility {

std::string to_string(DegeneracySource source) {
  switch (source) {
    case DegeneracySource::derived_algebra: return "derived-algebra line";
    case DegeneracySource::nilradical_center: return "nilradical center";
    case DegeneracySource::generalized_eigenspace: return "generalized eigenspace";
  }
  return "unknown";
}

bool is_universally_degenerate(const FeasibilityProblem& p, const Vector& v) {
  if (v.size() != p.dim() || tamecert::is_zero(v)) return false;
  for (const auto& s : p.gram_basis)
    if (dot(v, s * v) != 0) return false;
  return true;
}

namespace {

struct Candidate {
  Subspace space;
  DegeneracySource source;
};

/// Vectors of W that are orthogonal to all of W under every Gram form.
Subspace common_radical(const FeasibilityProblem& p, const Subspace& w) {
  const Matrix b = w.basis_matrix();
  const Matrix bt = b.transpose();
  std::vector<Vector> rows;
  for (const auto& s : p.gram_basis) {
    const Matrix block = bt * (s * b);
    for (std::size_t r = 0; r < block.rows(); ++r) rows.push_back(block.row(r));
  }
  if (rows.empty()) return w;
  std::vector<Vector> out;
  for (const auto& x : kernel_basis(Matrix::from_rows(rows, w.dim()))) out.push_back(b * x);
  return Subspace(p.dim(), out);
}

Matrix power(const Matrix& m, std::size_t k) {
  Matrix out = Matrix::identity(m.rows());
  for (std::size_t i = 0; i < k; ++i) out = out * m;
  return out;
}

std::vector<Candidate> candidates(const LieAlgebra& g) {
  std::vector<Candidate> out;
  const Subspace derived = derived_algebra(g);
  out.push_back({derived, DegeneracySource::derived_algebra});
  for (const auto& line : one_dim_ideals(g))
    if (derived.contains(line)) out.push_back({line, DegeneracySource::derived_algebra});

  if (!is_solvable(g)) return out;
  const Subspace n = nilradical(g);
  out.push_back({intersection(n, centralizer(g, n)), DegeneracySource::nilradical_center});

  const Matrix basis = n.basis_matrix();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const Matrix a = restrict_to(g.ad_basis(i), n);
    if (a.is_zero()) continue;
    for (const auto& lambda : rational_roots(Polynomial(characteristic_polynomial(a)))) {
      Matrix shifted = a - lambda * Matrix::identity(a.rows());
      std::vector<Vector> vs;
      for (const auto& x : kernel_basis(power(shifted, a.rows()))) vs.push_back(basis * x);
      out.push_back({Subspace(g.dim(), vs), DegeneracySource::generalized_eigenspace});
    }
  }
  return out;
}

}  // namespace

std::optional<DegeneracyDirection> degeneracy_precheck(const FeasibilityProblem& p) {
  for (const auto& cand : candidates(p.algebra)) {
    if (cand.space.is_zero()) continue;
    for (const auto& v : cand.space.basis())
      if (is_universally_degenerate(p, v)) return DegeneracyDirection{v, cand.source};
    const Subspace radical = common_radical(p, cand.space);
    if (!radical.is_zero()) return DegeneracyDirection{radical.basis().front(), cand.source};
  }
  return std::nullopt;
}

}  // namespace tamecert::feasibility
