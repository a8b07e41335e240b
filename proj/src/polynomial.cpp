#include "tamecert/polynomial.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cassert>
#include <cmath>

namespace tamecert {

Polynomial::Polynomial(std::vector<Scalar> coefficients) : c_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Scalar Polynomial::operator()(const Scalar& x) const {
  Scalar acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Scalar> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Scalar(static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  std::vector<Scalar> m(c_);
  const Scalar lc = c_.back();
  for (auto& x : m) x /= lc;
  return Polynomial(std::move(m));
}

Polynomial operator-(const Polynomial& p) {
  std::vector<Scalar> m(p.c_);
  for (auto& x : m) x = -x;
  return Polynomial(std::move(m));
}

namespace {

void divide(const Polynomial& a, const Polynomial& b, Polynomial* q, Polynomial* r) {
  assert(!b.is_zero());
  std::vector<Scalar> rem(a.coefficients());
  const auto& bc = b.coefficients();
  const int db = b.degree();
  std::vector<Scalar> quo(std::max(0, a.degree() - db + 1), Scalar(0));
  for (int k = a.degree() - db; k >= 0; --k) {
    const Scalar f = rem[static_cast<std::size_t>(k + db)] / bc.back();
    quo[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k + i)] -= f * bc[static_cast<std::size_t>(i)];
  }
  if (q) *q = Polynomial(std::move(quo));
  if (r) *r = Polynomial(std::move(rem));
}

int sign(const Scalar& x) { return sgn(x); }

}  // namespace

Polynomial remainder(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  divide(a, b, nullptr, &r);
  return r;
}

Polynomial quotient(const Polynomial& a, const Polynomial& b) {
  Polynomial q;
  divide(a, b, &q, nullptr);
  return q;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  return quotient(p, gcd(p, p.derivative())).monic();
}

int count_distinct_real_roots(const Polynomial& p) {
  const Polynomial sf = squarefree_part(p);
  if (sf.degree() <= 0) return 0;
  std::vector<Polynomial> seq{sf, sf.derivative()};
  while (!seq.back().is_zero()) {
    Polynomial r = -remainder(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) break;
    seq.push_back(std::move(r));
  }
  auto changes = [&](bool at_plus_infinity) {
    int count = 0, prev = 0;
    for (const auto& q : seq) {
      int s = sign(q.leading());
      if (!at_plus_infinity && q.degree() % 2 == 1) s = -s;
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  };
  return changes(false) - changes(true);
}

bool has_only_real_roots(const Polynomial& p) {
  const Polynomial sf = squarefree_part(p);
  return count_distinct_real_roots(sf) == std::max(0, sf.degree());
}

std::vector<std::complex<double>> numeric_roots(const Polynomial& p) {
  const Polynomial sf = squarefree_part(p);
  const int n = sf.degree();
  if (n <= 0) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -sf.coefficients()[static_cast<std::size_t>(i)].get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<std::complex<double>> roots;
  for (int i = 0; i < n; ++i) roots.push_back(solver.eigenvalues()(i));
  return roots;
}

std::vector<Scalar> rational_roots(const Polynomial& p) {
  std::vector<Scalar> roots;
  if (p.degree() <= 0) return roots;
  if (p.coefficients().front() == 0) roots.emplace_back(0);
  for (const auto& z : numeric_roots(p)) {
    if (std::abs(z.imag()) > 1e-6 * (1.0 + std::abs(z.real()))) continue;
    const Scalar candidate = limit_denominator(from_double(z.real()), mpz_class(1000000));
    if (p(candidate) == 0) roots.push_back(candidate);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace tamecert
