#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tamecert/complex_structure.hpp"
#include "tamecert/forms.hpp"
#include "tamecert/lie_algebra.hpp"

namespace tamecert::testing {

struct Example {
  std::string name;
  LieAlgebra g;
  std::optional<Matrix> J;
  std::optional<forms::TwoForm> omega;
};

inline BracketEntry br(std::size_t i, std::size_t j, std::map<std::size_t, Scalar> v) { return {i, j, std::move(v)}; }

/// J(e_{2k}) = e_{2k+1}.
inline Matrix standard_j(std::size_t n) { return forms::ComplexStructure::standard(n).matrix(); }

/// sum_k e^{2k} ^ e^{2k+1}
inline forms::TwoForm standard_omega(std::size_t n) {
  forms::TwoForm w(n);
  for (std::size_t k = 0; k + 1 < n; k += 2) w.set(k, k + 1, 1);
  return w;
}

inline Matrix j_from_images(std::size_t n, const std::vector<std::pair<std::size_t, Vector>>& images) {
  Matrix j(n, n);
  for (const auto& [c, v] : images)
    for (std::size_t r = 0; r < n; ++r) j(r, c) = v[r];
  return j;
}

inline Example abelian(std::size_t n) {
  return {"abelian_r" + std::to_string(n), LieAlgebra::abelian(n), standard_j(n), standard_omega(n)};
}

/// h3 + R: [e1, e2] = e3.
inline Example h3_r() {
  return {"h3_r", LieAlgebra::create({"e1", "e2", "e3", "e4"}, {br(0, 1, {{2, 1}})}), standard_j(4), std::nullopt};
}

/// aff(R): [H, X] = X, J H = X, omega = h ^ x.
inline Example aff() {
  return {"aff_r", LieAlgebra::create({"H", "X"}, {br(0, 1, {{1, 1}})}), standard_j(2), standard_omega(2)};
}

inline Example aff_power(std::size_t copies) {
  std::vector<std::string> labels;
  std::vector<BracketEntry> brackets;
  for (std::size_t c = 0; c < copies; ++c) {
    labels.push_back("H" + std::to_string(c + 1));
    labels.push_back("X" + std::to_string(c + 1));
    brackets.push_back(br(2 * c, 2 * c + 1, {{2 * c + 1, 1}}));
  }
  return {"aff_r" + std::to_string(copies), LieAlgebra::create(labels, brackets), standard_j(2 * copies),
          standard_omega(2 * copies)};
}

/// sol4_1: [T, X] = X, [T, Y] = -Y, [X, Y] = Z; J T = X, J Y = -Z.
inline Example sol41() {
  auto g = LieAlgebra::create({"T", "X", "Y", "Z"}, {br(0, 1, {{1, 1}}), br(0, 2, {{2, -1}}), br(1, 2, {{3, 1}})});
  Matrix j = j_from_images(4, {{0, {0, 1, 0, 0}}, {1, {-1, 0, 0, 0}}, {2, {0, 0, 0, -1}}, {3, {0, 0, 1, 0}}});
  return {"sol41", std::move(g), std::move(j), std::nullopt};
}

/// sol4_1 + R^2 with J extended by the standard structure.
inline Example sol41_r2() {
  auto g = LieAlgebra::create({"T", "X", "Y", "Z", "U", "W"},
                              {br(0, 1, {{1, 1}}), br(0, 2, {{2, -1}}), br(1, 2, {{3, 1}})});
  Matrix j = j_from_images(6, {{0, {0, 1, 0, 0, 0, 0}},
                               {1, {-1, 0, 0, 0, 0, 0}},
                               {2, {0, 0, 0, -1, 0, 0}},
                               {3, {0, 0, 1, 0, 0, 0}},
                               {4, {0, 0, 0, 0, 0, 1}},
                               {5, {0, 0, 0, 0, -1, 0}}});
  return {"sol41_r2", std::move(g), std::move(j), std::nullopt};
}

/// h3 + h3: [e1, e2] = e5, [e3, e4] = e6, standard J.
inline Example h3_h3() {
  return {"h3_h3", LieAlgebra::create({"e1", "e2", "e3", "e4", "e5", "e6"}, {br(0, 1, {{4, 1}}), br(2, 3, {{5, 1}})}),
          standard_j(6), std::nullopt};
}

/// h3 + R^3: [e1, e2] = e3, standard J.
inline Example h3_r3() {
  return {"h3_r3", LieAlgebra::create({"e1", "e2", "e3", "e4", "e5", "e6"}, {br(0, 1, {{2, 1}})}), standard_j(6),
          std::nullopt};
}

/// h5 + R: [e1, e2] = [e3, e4] = e5, standard J.
inline Example h5_r() {
  return {"h5_r", LieAlgebra::create({"e1", "e2", "e3", "e4", "e5", "e6"}, {br(0, 1, {{4, 1}}), br(2, 3, {{4, 1}})}),
          standard_j(6), std::nullopt};
}

/// Complex Heisenberg algebra viewed as a real 6-dimensional algebra.
inline Example iwasawa() {
  return {"iwasawa",
          LieAlgebra::create({"e1", "e2", "e3", "e4", "e5", "e6"},
                             {br(0, 2, {{4, 1}}), br(0, 3, {{5, 1}}), br(1, 2, {{5, 1}}), br(1, 3, {{4, -1}})}),
          standard_j(6), std::nullopt};
}

/// Inoue S0 type: ad_H = diag(-2) + [[1, -1], [1, 1]] on (E1; E2, E3).
inline Example inoue_s0() {
  return {"inoue_s0",
          LieAlgebra::create({"H", "E1", "E2", "E3"},
                             {br(0, 1, {{1, -2}}), br(0, 2, {{2, 1}, {3, 1}}), br(0, 3, {{2, -1}, {3, 1}})}),
          standard_j(4), std::nullopt};
}

/// sol3 + R with a non-integrable J: J H = U, J X = Y.
inline Example sol3_r_nonintegrable() {
  auto g = LieAlgebra::create({"H", "X", "Y", "U"}, {br(0, 1, {{1, 1}}), br(0, 2, {{2, -1}})});
  Matrix j = j_from_images(4, {{0, {0, 0, 0, 1}}, {3, {-1, 0, 0, 0}}, {1, {0, 0, 1, 0}}, {2, {0, -1, 0, 0}}});
  return {"sol3_r_nonintegrable", std::move(g), std::move(j), std::nullopt};
}

/// The same triple written in the basis given by the columns of p.
inline Example in_basis(const Example& ex, const Matrix& p, std::string name) {
  const Matrix pinv = *inverse(p);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < p.cols(); ++i) labels.push_back("f" + std::to_string(i + 1));
  Example out{std::move(name), LieAlgebra::create(labels, ex.g.change_basis(p).brackets()), std::nullopt, std::nullopt};
  if (ex.J) out.J = pinv * (*ex.J * p);
  if (ex.omega) out.omega = forms::TwoForm::from_matrix(p.transpose() * (ex.omega->matrix() * p));
  return out;
}

/// Complex hyperbolic plane: [H, X] = 2X, [H, Y] = Y, [H, Z] = Z, [Y, Z] = X;
/// J H = X, J Y = Z, omega = h ^ x + 1/2 y ^ z.
inline Example complex_hyperbolic() {
  auto g = LieAlgebra::create({"H", "X", "Y", "Z"},
                              {br(0, 1, {{1, 2}}), br(0, 2, {{2, 1}}), br(0, 3, {{3, 1}}), br(2, 3, {{1, 1}})});
  forms::TwoForm w(4);
  w.set(0, 1, 1);
  w.set(2, 3, Scalar(1, 2));
  return {"complex_hyperbolic", std::move(g), standard_j(4), w};
}

/// R^4 with e12 + e34 + 1/2 e13: taming, not J-invariant.
inline Example r4_noncompatible() {
  Example ex = abelian(4);
  ex.name = "abelian_r4_noncompatible";
  ex.omega->set(0, 2, Scalar(1, 2));
  return ex;
}

/// aff(R)^2 with the closed form h1 ^ x1 + h2 ^ x2 + 1/4 h1 ^ h2.
inline Example aff2_noncompatible() {
  Example ex = aff_power(2);
  ex.name = "aff_r2_noncompatible";
  ex.omega->set(0, 2, Scalar(1, 4));
  return ex;
}

inline std::vector<Example> all_examples() {
  return {abelian(2), abelian(4), abelian(6), abelian(8), h3_r(),  aff(),      aff_power(2),
          aff_power(3), sol41(),  sol41_r2(), h3_h3(),   h3_r3(),   h5_r(),    iwasawa(),
          inoue_s0(),   sol3_r_nonintegrable()};
}

/// Examples carrying a closed 2-form that tames an integrable J.
inline std::vector<Example> tamed_examples() {
  Matrix p = Matrix::from_rows({{1, 1, 0, 0}, {0, 2, 0, 1}, {1, 0, 1, 0}, {0, 0, Scalar(1, 2), 1}}, 4);
  return {abelian(2),        abelian(4),         abelian(6),
          abelian(8),        aff(),              aff_power(2),
          aff_power(3),      r4_noncompatible(), aff2_noncompatible(),
          complex_hyperbolic(), in_basis(aff_power(2), p, "aff_r2_skewed")};
}

}  // namespace tamecert::testing
