#pragma once

#include <cstddef>
#include <vector>

#include "tamecert/matrix.hpp"

namespace tamecert {

/// Linear subspace of Q^n, stored as the rows of its reduced echelon basis.
/// Two subspaces are equal iff their stored bases are identical.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}
  Subspace(std::size_t ambient_dim, const std::vector<Vector>& spanning);

  static Subspace whole(std::size_t n);
  static Subspace line(const Vector& v) { return Subspace(v.size(), {v}); }

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Columns without a pivot; the unit vectors on them span the echelon complement.
  std::vector<std::size_t> free_columns() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// v minus its echelon projection: zero on pivot columns, zero iff v is inside.
  Vector reduce(const Vector& v) const;
  /// Coordinates of v (which must lie inside) against basis().
  Vector coordinates(const Vector& v) const;

  /// Matrix whose columns are the basis vectors.
  Matrix basis_matrix() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_dim_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);
/// Image of s under the linear map m.
Subspace image(const Matrix& m, const Subspace& s);

/// Deterministic order used for tie-breaking: by pivot columns, then by entries.
bool echelon_less(const Subspace& a, const Subspace& b);

}  // namespace tamecert
