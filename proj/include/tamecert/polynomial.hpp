#pragma once

#include <complex>
#include <vector>

#include "tamecert/scalar.hpp"

namespace tamecert {

/// Univariate polynomial with rational coefficients, stored low to high with no
/// trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coefficients);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coefficients() const { return c_; }
  const Scalar& leading() const { return c_.back(); }

  Scalar operator()(const Scalar& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator-(const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Scalar> c_;
};

/// Remainder of a divided by b (b nonzero).
Polynomial remainder(const Polynomial& a, const Polynomial& b);
Polynomial quotient(const Polynomial& a, const Polynomial& b);
/// Monic gcd.
Polynomial gcd(Polynomial a, Polynomial b);
/// p / gcd(p, p'): same roots, all simple.
Polynomial squarefree_part(const Polynomial& p);

/// Number of distinct real roots, by a Sturm sequence evaluated at -inf and +inf.
int count_distinct_real_roots(const Polynomial& p);

/// True iff every complex root of p is real.
bool has_only_real_roots(const Polynomial& p);

/// Numerical roots of the squarefree part (companion matrix eigenvalues).
std::vector<std::complex<double>> numeric_roots(const Polynomial& p);

/// Distinct rational roots, ascending. Candidates come from numeric_roots and are
/// confirmed by exact evaluation; denominators above 10^6 are not searched.
std::vector<Scalar> rational_roots(const Polynomial& p);

}  // namespace tamecert
