#include <doctest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"
#include "tamecert/errors.hpp"
#include "tamecert/polynomial.hpp"
#include "tamecert/structure.hpp"
#include "tamecert/weights.hpp"

using namespace tamecert;
namespace tt = tamecert::testing;

namespace {

Subspace span(std::size_t n, std::initializer_list<std::size_t> idx) {
  std::vector<Vector> vs;
  for (auto i : idx) vs.push_back(unit_vector(n, i));
  return Subspace(n, vs);
}

}  // namespace

TEST_SUITE("scalar") {
  TEST_CASE("parse and print") {
    CHECK(parse_scalar("-3/6") == Scalar(-1, 2));
    CHECK(parse_scalar("7") == 7);
    CHECK(to_string(Scalar(4, 6)) == "2/3");
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
    CHECK_THROWS_AS(parse_scalar("x"), ParseError);
    CHECK_THROWS_AS(parse_scalar(""), ParseError);
  }

  TEST_CASE("limit_denominator") {
    CHECK(limit_denominator(from_double(3.141592653589793), 7) == Scalar(22, 7));
    CHECK(limit_denominator(from_double(3.141592653589793), 1000) == Scalar(355, 113));
    CHECK(limit_denominator(Scalar(1, 3), 2) == Scalar(1, 2));
    CHECK(limit_denominator(Scalar(-5, 7), 100) == Scalar(-5, 7));
  }
}

TEST_SUITE("linear algebra") {
  TEST_CASE("rref, kernel, determinant") {
    Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
    CHECK(rank(m) == 2);
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(is_zero(m * k[0]));
    CHECK(determinant(m) == 0);
    CHECK(determinant(Matrix::from_rows({{2, 1}, {1, 1}}, 2)) == 1);
  }

  TEST_CASE("characteristic polynomial and roots") {
    Matrix m = Matrix::from_rows({{1, 0, 0}, {0, -1, 0}, {0, 0, 0}}, 3);
    Polynomial p(characteristic_polynomial(m));
    CHECK(p == Polynomial({0, -1, 0, 1}));
    CHECK(rational_roots(p) == std::vector<Scalar>{-1, 0, 1});
    CHECK(has_only_real_roots(p));
    CHECK_FALSE(has_only_real_roots(Polynomial({2, -2, 1})));  // t^2 - 2t + 2
    CHECK(count_distinct_real_roots(Polynomial({-2, 0, 1})) == 2);
  }

  TEST_CASE("positive definiteness") {
    CHECK(is_positive_definite(Matrix::identity(3)));
    CHECK_FALSE(is_positive_definite(Matrix::from_rows({{1, 2}, {2, 1}}, 2)));
    CHECK_FALSE(is_positive_definite(Matrix::from_rows({{0, 0}, {0, 1}}, 2)));
  }

  TEST_CASE("subspace canonical form is idempotent") {
    tt::RationalSource rng(11);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Vector> vs;
      for (int i = 0; i < 3; ++i) vs.push_back(rng.vector(5));
      Subspace s(5, vs);
      CHECK(Subspace(5, s.basis()) == s);
      std::vector<Vector> shuffled{vs[2], 2 * vs[0] + vs[1], vs[1]};
      CHECK(Subspace(5, shuffled) == s);
      for (const auto& v : vs) CHECK(s.contains(v));
    }
  }

  TEST_CASE("intersection and sum") {
    auto a = span(4, {0, 1});
    auto b = Subspace(4, {{0, 1, 1, 0}, {0, 0, 0, 1}});
    CHECK(intersection(a, b).is_zero());
    CHECK(sum(a, b).dim() == 4);
    auto c = Subspace(4, {{1, 1, 0, 0}});
    CHECK(intersection(a, c) == c);
  }
}

TEST_SUITE("lie algebra") {
  TEST_CASE("validation") {
    CHECK_NOTHROW(tt::abelian(4));
    CHECK_NOTHROW(tt::h3_r());
    try {
      LieAlgebra::create({"e1", "e2", "e3"}, {tt::br(0, 1, {{2, 1}}), tt::br(0, 2, {{1, 1}}), tt::br(1, 2, {{1, 1}})});
      FAIL("expected JacobiViolation");
    } catch (const JacobiViolation& e) {
      CHECK(e.triple() == std::array<std::size_t, 3>{0, 1, 2});
      CHECK(e.residual() == Vector{0, 0, -1});
    }
    CHECK_THROWS_AS(LieAlgebra::create({"a", "b"}, {tt::br(1, 0, {{0, 1}})}), DimensionMismatch);
    CHECK_THROWS_AS(LieAlgebra::create({"a", "b"}, {tt::br(0, 2, {{0, 1}})}), DimensionMismatch);
    CHECK_THROWS_AS(LieAlgebra::create({"a", "b"}, {tt::br(0, 1, {{0, 1}}), tt::br(0, 1, {{1, 1}})}),
                    DimensionMismatch);
  }

  TEST_CASE("Jacobi violation residual agrees with the oracle") {
    // Build the raw tensor by hand so that validation happens in from_tensor.
    std::vector<Scalar> c(27, 0);
    auto set = [&](int i, int j, int k, int v) {
      c[(i * 3 + j) * 3 + k] = v;
      c[(j * 3 + i) * 3 + k] = -v;
    };
    set(0, 1, 2, 1);
    set(0, 2, 1, 1);
    set(1, 2, 1, 1);
    tt::oracle::Tensor t(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) t[i] = c[i].get_d();
    Eigen::VectorXd e1 = Eigen::VectorXd::Unit(3, 0), e2 = Eigen::VectorXd::Unit(3, 1), e3 = Eigen::VectorXd::Unit(3, 2);
    using tt::oracle::bracket;
    Eigen::VectorXd expected = bracket(t, 3, bracket(t, 3, e1, e2), e3) + bracket(t, 3, bracket(t, 3, e2, e3), e1) +
                               bracket(t, 3, bracket(t, 3, e3, e1), e2);
    try {
      LieAlgebra::from_tensor({"a", "b", "c"}, c);
      FAIL("expected JacobiViolation");
    } catch (const JacobiViolation& e) {
      for (int k = 0; k < 3; ++k) CHECK(to_double(e.residual()[k]) == doctest::Approx(expected(k)));
    }
  }

  TEST_CASE("adjoint") {
    CHECK(tt::abelian(4).g.adjoint({1, 2, 3, 4}).is_zero());
    Matrix ad_h = tt::aff().g.adjoint({1, 0});
    CHECK(ad_h == Matrix::from_rows({{0, 0}, {0, 1}}, 2));
    Matrix ad_e1 = tt::h3_r().g.adjoint(unit_vector(4, 0));
    Matrix expected(4, 4);
    expected(2, 1) = 1;
    CHECK(ad_e1 == expected);
  }

  TEST_CASE("every example satisfies Jacobi exactly") {
    for (const auto& ex : tt::all_examples()) {
      const auto n = ex.g.dim();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          for (std::size_t k = j + 1; k < n; ++k)
            CHECK(is_zero(jacobiator(ex.g, unit_vector(n, i), unit_vector(n, j), unit_vector(n, k))));
    }
  }

  TEST_CASE("change of basis round trip") {
    tt::RationalSource rng(5);
    const auto g = tt::sol41().g;
    const Matrix p = rng.invertible(4);
    const auto h = g.change_basis(p);
    CHECK(h.change_basis(*inverse(p)).brackets().size() == g.brackets().size());
    CHECK(h.change_basis(*inverse(p)) == g);
  }
}

TEST_SUITE("structure") {
  TEST_CASE("unimodularity") {
    CHECK(is_unimodular(tt::h3_r().g).unimodular);
    auto aff = is_unimodular(tt::aff().g);
    CHECK_FALSE(aff.unimodular);
    CHECK(aff.witness == 0u);
    CHECK(aff.witness_trace == 1);
    CHECK(is_unimodular(tt::sol41().g).unimodular);
  }

  TEST_CASE("derived and central series") {
    auto h3 = derived_series(tt::h3_r().g);
    REQUIRE(h3.size() == 3);
    CHECK(h3[1] == span(4, {2}));
    CHECK(h3[2].is_zero());
    CHECK(is_nilpotent(tt::h3_r().g));

    auto aff = derived_series(tt::aff().g);
    REQUIRE(aff.size() == 3);
    CHECK(aff[1] == span(2, {1}));
    CHECK(is_solvable(tt::aff().g));
    CHECK_FALSE(is_nilpotent(tt::aff().g));

    auto r2 = derived_series(tt::abelian(2).g);
    REQUIRE(r2.size() == 2);
    CHECK(r2[1].is_zero());
  }

  TEST_CASE("non-solvable algebra") {
    // sl(2): [h, e] = 2e, [h, f] = -2f, [e, f] = h.
    auto sl2 = LieAlgebra::create({"h", "e", "f"}, {tt::br(0, 1, {{1, 2}}), tt::br(0, 2, {{2, -2}}), tt::br(1, 2, {{0, 1}})});
    CHECK_FALSE(is_solvable(sl2));
    CHECK_FALSE(is_completely_solvable(sl2).completely_solvable);
    CHECK_THROWS_AS(nilradical(sl2), NotSolvable);
    CHECK_THROWS_AS(adjoint_weights(sl2), NotSolvable);
  }

  TEST_CASE("complete solvability") {
    for (auto ex : {tt::h3_r(), tt::h3_h3(), tt::iwasawa(), tt::abelian(4)})
      CHECK(is_completely_solvable(ex.g).completely_solvable);
    CHECK(is_completely_solvable(tt::sol41().g).completely_solvable);
    auto inoue = is_completely_solvable(tt::inoue_s0().g);
    CHECK(inoue.solvable);
    CHECK_FALSE(inoue.completely_solvable);
    CHECK(inoue.witness == 0u);
    CHECK(std::abs(inoue.witness_eigenvalue.imag()) == doctest::Approx(1.0));
  }

  TEST_CASE("adjoint weights") {
    auto ab = adjoint_weights(tt::abelian(4).g);
    for (const auto& row : ab.weights.values)
      for (auto w : row) CHECK(std::abs(w) == 0.0);

    auto aff = adjoint_weights(tt::aff().g);
    REQUIRE(aff.flag);
    CHECK((*aff.flag)[0] == span(2, {1}));
    REQUIRE(aff.weights.exact);
    CHECK((*aff.weights.exact)[0] == Vector{1, 0});
    CHECK((*aff.weights.exact)[1] == Vector{0, 0});

    auto inoue = adjoint_weights(tt::inoue_s0().g);
    CHECK_FALSE(inoue.weights.exact);
    CHECK(inoue.weights.max_imaginary() == doctest::Approx(1.0));
  }

  TEST_CASE("nilradical") {
    CHECK(nilradical(tt::h3_r().g) == Subspace::whole(4));
    CHECK(nilradical(tt::aff().g) == span(2, {1}));
    CHECK(nilradical(tt::sol41().g) == span(4, {1, 2, 3}));
    CHECK(nilradical(tt::inoue_s0().g) == span(4, {1, 2, 3}));
  }

  TEST_CASE("one-dimensional ideals and quotients") {
    auto aff = one_dim_ideals(tt::aff().g);
    REQUIRE(aff.size() == 1);
    CHECK(aff[0] == span(2, {1}));

    auto h3 = one_dim_ideals(tt::h3_r().g);
    CHECK(std::find(h3.begin(), h3.end(), span(4, {2})) != h3.end());
    CHECK(std::find(h3.begin(), h3.end(), span(4, {3})) != h3.end());
    for (const auto& l : h3) CHECK(is_ideal(tt::h3_r().g, l));

    auto q = quotient(tt::h3_r().g, span(4, {2}));
    CHECK(q.dim() == 3);
    CHECK(q.is_abelian());
    CHECK_THROWS_AS(quotient(tt::aff().g, span(2, {0})), NotAnIdeal);
  }

  TEST_CASE("subalgebra") {
    auto s = subalgebra(tt::sol41().g, span(4, {1, 2, 3}));
    CHECK(s.dim() == 3);
    CHECK(is_nilpotent(s));
    CHECK_THROWS_AS(subalgebra(tt::h3_r().g, span(4, {0, 1})), NotASubalgebra);
  }
}

TEST_SUITE("structure properties") {
  TEST_CASE("nilpotent => completely solvable => solvable") {
    for (const auto& ex : tt::all_examples()) {
      const bool nil = is_nilpotent(ex.g);
      const auto cs = is_completely_solvable(ex.g);
      if (nil) CHECK(cs.completely_solvable);
      if (cs.completely_solvable) CHECK(cs.solvable);
      CHECK(cs.solvable == is_solvable(ex.g));
    }
  }

  TEST_CASE("flag subspaces are ideals and weights sum to the trace") {
    tt::RationalSource rng(2024);
    for (const auto& ex : tt::all_examples()) {
      CAPTURE(ex.name);
      auto w = adjoint_weights(ex.g);
      if (w.flag)
        for (const auto& f : *w.flag) CHECK(is_ideal(ex.g, f));
      for (int s = 0; s < 20; ++s) {
        const Vector x = rng.vector(ex.g.dim());
        const double trace = to_double(ex.g.adjoint(x).trace());
        std::complex<double> total = 0;
        for (std::size_t k = 0; k < w.weights.size(); ++k) total += w.weights.evaluate(k, to_doubles(x));
        CHECK(total.real() == doctest::Approx(trace).epsilon(1e-9));
        CHECK(std::abs(total.imag()) < 1e-9);
        if (w.weights.exact) {
          Scalar exact = 0;
          for (const auto& row : *w.weights.exact) exact += dot(row, x);
          CHECK(exact == ex.g.adjoint(x).trace());
        }
      }
    }
  }

  TEST_CASE("nilradical is a nilpotent ideal containing the derived algebra") {
    for (const auto& ex : tt::all_examples()) {
      CAPTURE(ex.name);
      const auto n = nilradical(ex.g);
      CHECK(is_ideal(ex.g, n));
      CHECK(is_nilpotent(subalgebra(ex.g, n)));
      CHECK(n.contains(derived_algebra(ex.g)));
      for (const auto& v : n.basis()) CHECK(is_nilpotent(ex.g.adjoint(v)));
    }
  }

  TEST_CASE("quotients by line ideals revalidate") {
    for (const auto& ex : tt::all_examples())
      for (const auto& line : one_dim_ideals(ex.g)) {
        auto q = quotient(ex.g, line);
        CHECK_NOTHROW(LieAlgebra::create(q.labels(), q.brackets()));
      }
  }

  TEST_CASE("flags are invariant under a random change of basis") {
    tt::RationalSource rng(99);
    for (const auto& ex : tt::all_examples()) {
      CAPTURE(ex.name);
      const auto h = ex.g.change_basis(rng.invertible(ex.g.dim()));
      CHECK(is_unimodular(h).unimodular == is_unimodular(ex.g).unimodular);
      CHECK(is_nilpotent(h) == is_nilpotent(ex.g));
      CHECK(is_completely_solvable(h).completely_solvable == is_completely_solvable(ex.g).completely_solvable);
      CHECK(nilradical(h).dim() == nilradical(ex.g).dim());
      CHECK(derived_algebra(h).dim() == derived_algebra(ex.g).dim());
    }
  }
}
