#include <doctest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"
#include "tamecert/errors.hpp"
#include "tamecert/taming.hpp"

using namespace tamecert;
using namespace tamecert::forms;
namespace tt = tamecert::testing;

namespace {

TwoForm random_closed_form(const LieAlgebra& g, tt::RationalSource& rng) {
  TwoForm w(g.dim());
  for (const auto& b : closed_two_forms(g)) w = w + rng.next() * b;
  return w;
}

}  // namespace

TEST_SUITE("differential") {
  TEST_CASE("d on 1-forms") {
    const auto g = tt::h3_r().g;
    TwoForm expected(4);
    expected.set(0, 1, -1);
    CHECK(d(g, unit_vector(4, 2)) == expected);
    CHECK(d(tt::abelian(4).g, Vector{1, 2, 3, 4}).is_zero());
    // aff(R): dx = -h ^ x.
    TwoForm dx(2);
    dx.set(0, 1, -1);
    CHECK(d(tt::aff().g, Vector{0, 1}) == dx);
  }

  TEST_CASE("d on 2-forms") {
    CHECK(d(tt::aff().g, tt::standard_omega(2)).is_zero());
    CHECK(d(tt::abelian(4).g, tt::standard_omega(4)).is_zero());
    // d(e3 ^ e4) on h3 + R: -w([e1, e2], e4) = -1 on (e1, e2, e4).
    TwoForm e34(4);
    e34.set(2, 3, 1);
    const ThreeForm t = d(tt::h3_r().g, e34);
    CHECK(t.coefficient(0, 1, 3) == -1);
    CHECK(t.coefficient(0, 1, 2) == 0);
  }

  TEST_CASE("closed 2-forms") {
    CHECK(closed_two_forms(tt::abelian(4).g).size() == 6);
    auto h3 = closed_two_forms(tt::h3_r().g);
    REQUIRE(h3.size() == 5);
    const std::vector<std::pair<std::size_t, std::size_t>> expected{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
    for (std::size_t a = 0; a < 5; ++a) {
      TwoForm e(4);
      e.set(expected[a].first, expected[a].second, 1);
      CHECK(h3[a] == e);
    }
    auto aff = closed_two_forms(tt::aff().g);
    REQUIRE(aff.size() == 1);
    CHECK(aff[0] == tt::standard_omega(2));
  }

  TEST_CASE("two-form validation") {
    CHECK_THROWS_AS(TwoForm::from_matrix(Matrix::identity(2)), DimensionMismatch);
    CHECK_THROWS_AS(TwoForm::from_matrix(Matrix(2, 3)), DimensionMismatch);
    const TwoForm w = TwoForm::from_coefficients(3, {1, 2, 3});
    CHECK(w.coefficient(1, 2) == 3);
    CHECK(w.coefficient(2, 1) == -3);
    CHECK(w.coefficients() == Vector{1, 2, 3});
  }
}

TEST_SUITE("complex structures") {
  TEST_CASE("construction") {
    CHECK_THROWS_AS(ComplexStructure::create(Matrix::identity(2)), NotAComplexStructure);
    CHECK_THROWS_AS(ComplexStructure::create(Matrix(3, 3)), NotAComplexStructure);
    CHECK_THROWS_AS(ComplexStructure::create(Matrix(2, 3)), NotAComplexStructure);
    const auto j = ComplexStructure::standard(4);
    CHECK(j(unit_vector(4, 0)) == unit_vector(4, 1));
    CHECK(j(unit_vector(4, 1)) == -unit_vector(4, 0));
    for (const auto& ex : tt::all_examples()) CHECK(squares_to_minus_identity(*ex.J));
  }

  TEST_CASE("Nijenhuis tensor") {
    const auto h3 = tt::h3_r();
    CHECK(is_integrable(h3.g, ComplexStructure::create(*h3.J)));
    for (const auto& v : nijenhuis(h3.g, ComplexStructure::create(*h3.J))) CHECK(is_zero(v.value));
    CHECK(is_integrable(tt::abelian(6).g, ComplexStructure::standard(6)));

    const auto s = tt::sol3_r_nonintegrable();
    const auto js = ComplexStructure::create(*s.J);
    CHECK_FALSE(is_integrable(s.g, js));
    CHECK(nijenhuis(s.g, js, unit_vector(4, 0), unit_vector(4, 1)) == Vector{0, -2, 0, 0});
  }

  TEST_CASE("integrability of the example structures") {
    for (const auto& ex : tt::all_examples()) {
      CAPTURE(ex.name);
      CHECK(is_integrable(ex.g, ComplexStructure::create(*ex.J)) == (ex.name != "sol3_r_nonintegrable"));
    }
  }

  TEST_CASE("N = 0 iff the bracket identity holds on basis pairs") {
    for (const auto& ex : tt::all_examples()) {
      const auto j = ComplexStructure::create(*ex.J);
      const auto n = ex.g.dim();
      bool identity = true;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          const Vector x = unit_vector(n, a), y = unit_vector(n, b);
          const Vector lhs = ex.g.bracket(j(x), j(y));
          const Vector rhs = ex.g.bracket(x, y) + j(ex.g.bracket(j(x), y)) + j(ex.g.bracket(x, j(y)));
          identity = identity && lhs == rhs;
        }
      CHECK(identity == is_integrable(ex.g, j));
    }
  }
}

TEST_SUITE("taming") {
  TEST_CASE("Gram matrices") {
    CHECK(taming_gram(tt::standard_omega(2), ComplexStructure::standard(2)).gram == Matrix::identity(2));
    const auto aff = tt::aff();
    CHECK(taming_gram(*aff.omega, ComplexStructure::create(*aff.J)).gram == Matrix::identity(2));
    CHECK(is_taming(*aff.omega, ComplexStructure::create(*aff.J)).taming);

    const TwoForm neg = Scalar(-1) * tt::standard_omega(2);
    const auto check = is_taming(neg, ComplexStructure::standard(2));
    CHECK_FALSE(check.taming);
    CHECK(check.margin == doctest::Approx(-1.0));
    CHECK_FALSE(is_taming(neg, ComplexStructure::standard(2), TamingMode::numeric).taming);
  }

  TEST_CASE("nondegeneracy and compatibility") {
    CHECK(is_nondegenerate(tt::standard_omega(4)));
    TwoForm e12(4);
    e12.set(0, 1, 1);
    CHECK_FALSE(is_nondegenerate(e12));
    CHECK(pfaffian(tt::standard_omega(4)) == 1);
    CHECK_THROWS_AS(pfaffian(TwoForm(3)), OddDimension);
    const auto aff = tt::aff();
    CHECK(is_compatible(*aff.omega, ComplexStructure::create(*aff.J)));

    // e12 + e34 + e13 tames the standard J on R^4 but is not J-invariant.
    TwoForm w = tt::standard_omega(4);
    w.set(0, 2, Scalar(1, 2));
    CHECK(is_taming(w, ComplexStructure::standard(4)).taming);
    CHECK_FALSE(is_compatible(w, ComplexStructure::standard(4)));
  }

  TEST_CASE("Pfaffian squared is the determinant") {
    tt::RationalSource rng(3);
    for (int trial = 0; trial < 10; ++trial) {
      const TwoForm w = TwoForm::from_coefficients(4, rng.vector(6));
      const Scalar pf = pfaffian(w);
      CHECK(pf * pf == determinant(w.matrix()));
    }
  }
}

TEST_SUITE("forms properties") {
  TEST_CASE("d o d = 0 on 1-forms") {
    for (const auto& ex : tt::all_examples())
      for (std::size_t i = 0; i < ex.g.dim(); ++i) CHECK(d(ex.g, d(ex.g, unit_vector(ex.g.dim(), i))).is_zero());
  }

  TEST_CASE("closed forms are closed and complete") {
    for (const auto& ex : tt::all_examples()) {
      CAPTURE(ex.name);
      const auto z2 = closed_two_forms(ex.g);
      for (const auto& w : z2) CHECK(d(ex.g, w).is_zero());
      const auto pairs = pair_count(ex.g.dim());
      CHECK(z2.size() + rank(two_form_differential(ex.g)) == pairs);
      CHECK(z2.size() == tt::oracle::closed_two_form_dimension(ex.g));
      std::vector<Vector> coeffs;
      for (const auto& w : z2) coeffs.push_back(w.coefficients());
      CHECK(rank(Matrix::from_rows(coeffs, pairs)) == z2.size());
    }
  }

  TEST_CASE("G(X, X) = w(X, JX) and taming implies nondegenerate") {
    tt::RationalSource rng(17);
    for (const auto& ex : tt::all_examples()) {
      const auto j = ComplexStructure::create(*ex.J);
      const TwoForm w = ex.omega ? *ex.omega : random_closed_form(ex.g, rng);
      const Matrix gram = taming_gram(w, j).gram;
      CHECK(gram.is_symmetric());
      for (int s = 0; s < 20; ++s) {
        const Vector x = rng.vector(ex.g.dim());
        CHECK(dot(x, gram * x) == w(x, j(x)));
      }
      if (is_taming(w, j).taming) CHECK(is_nondegenerate(w));
    }
  }

  TEST_CASE("exact and numeric taming agree away from the boundary") {
    tt::RationalSource rng(23);
    for (int trial = 0; trial < 40; ++trial) {
      const TwoForm w = TwoForm::from_coefficients(4, rng.vector(6));
      const auto j = ComplexStructure::standard(4);
      const auto exact = is_taming(w, j);
      if (std::abs(exact.margin) > 1e-6) CHECK(exact.taming == is_taming(w, j, TamingMode::numeric).taming);
    }
  }
}
