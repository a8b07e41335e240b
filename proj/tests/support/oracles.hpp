#pragma once

// Floating-point reference computations written directly from the definitions. They share
// no code path with the exact library routines they are compared against.

#include <Eigen/Dense>

#include <array>
#include <limits>
#include <random>
#include <vector>

#include "tamecert/lie_algebra.hpp"

namespace tamecert::testing::oracle {

using Tensor = std::vector<double>;  // c[(i * n + j) * n + k]

inline Tensor structure_tensor(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Tensor c(n * n * n, 0.0);
  for (const auto& b : g.brackets())
    for (const auto& [k, v] : b.value) {
      c[(b.i * n + b.j) * n + k] = v.get_d();
      c[(b.j * n + b.i) * n + k] = -v.get_d();
    }
  return c;
}

inline Eigen::VectorXd bracket(const Tensor& c, std::size_t n, const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(k) += x(i) * y(j) * c[(i * n + j) * n + k];
  return out;
}

/// Dimension of the closed 2-forms: evaluate dw(e_i, e_j, e_k) on each elementary form
/// and take the numerical rank of the resulting map.
inline std::size_t closed_two_form_dimension(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const Tensor c = structure_tensor(g);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) triples.push_back({i, j, k});
  if (triples.empty()) return pairs.size();
  Eigen::MatrixXd d(triples.size(), pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
    w(pairs[p].first, pairs[p].second) = 1;
    w(pairs[p].second, pairs[p].first) = -1;
    for (std::size_t t = 0; t < triples.size(); ++t) {
      auto e = [&](std::size_t i) { return Eigen::VectorXd::Unit(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(i)); };
      const auto [a, b, cc] = triples[t];
      const double v = -(bracket(c, n, e(a), e(b)).dot(w * e(cc))) - (bracket(c, n, e(b), e(cc)).dot(w * e(a))) -
                       (bracket(c, n, e(cc), e(a)).dot(w * e(b)));
      d(t, p) = v;
    }
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(d);
  lu.setThreshold(1e-10);
  return pairs.size() - static_cast<std::size_t>(lu.rank());
}

/// Gram forms 1/2 (W J + (W J)^T) for an orthonormal basis of the closed 2-forms, found as
/// the numerical kernel of d (SVD) rather than by exact elimination.
inline std::vector<Eigen::MatrixXd> closed_gram_matrices(const LieAlgebra& g, const Eigen::MatrixXd& j) {
  const std::size_t n = g.dim();
  const Tensor c = structure_tensor(g);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k) pairs.emplace_back(i, k);
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t e = b + 1; e < n; ++e) triples.push_back({a, b, e});
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(std::max<std::size_t>(triples.size(), 1)),
                                            static_cast<Eigen::Index>(pairs.size()));
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (std::size_t t = 0; t < triples.size(); ++t) {
      const auto [a, b, e] = triples[t];
      auto w = [&](std::size_t k, std::size_t l) {
        if (k == pairs[p].first && l == pairs[p].second) return 1.0;
        if (l == pairs[p].first && k == pairs[p].second) return -1.0;
        return 0.0;
      };
      double v = 0;
      for (std::size_t k = 0; k < n; ++k)
        v -= c[(a * n + b) * n + k] * w(k, e) + c[(b * n + e) * n + k] * w(k, a) + c[(e * n + a) * n + k] * w(k, b);
      d(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(p)) = v;
    }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(d, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  std::vector<Eigen::MatrixXd> out;
  for (Eigen::Index col = 0; col < static_cast<Eigen::Index>(pairs.size()); ++col) {
    if (col < sv.size() && sv(col) > 1e-9) continue;
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto a = static_cast<Eigen::Index>(pairs[p].first), b = static_cast<Eigen::Index>(pairs[p].second);
      w(a, b) = svd.matrixV()(static_cast<Eigen::Index>(p), col);
      w(b, a) = -w(a, b);
    }
    const Eigen::MatrixXd wj = w * j;
    out.push_back(0.5 * (wj + wj.transpose()));
  }
  return out;
}

/// Largest lambda_min(sum c_i S_i) over `samples` seeded uniform points c of the unit sphere.
inline double sampled_max_lambda_min(const std::vector<Eigen::MatrixXd>& grams, std::size_t samples, std::uint64_t seed) {
  if (grams.empty()) return 0.0;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto n = grams.front().rows();
  double best = -std::numeric_limits<double>::infinity();
  Eigen::VectorXd c(static_cast<Eigen::Index>(grams.size()));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  for (std::size_t s = 0; s < samples; ++s) {
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = normal(rng);
    c.normalize();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t i = 0; i < grams.size(); ++i) m += c(static_cast<Eigen::Index>(i)) * grams[i];
    es.compute(m, Eigen::EigenvaluesOnly);
    best = std::max(best, es.eigenvalues()(0));
  }
  return best;
}

}  // namespace tamecert::testing::oracle
