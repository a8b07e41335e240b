#include <doctest.h>

#include "support/fixtures.hpp"
#include "tamecert/errors.hpp"
#include "tamecert/reduction.hpp"
#include "tamecert/structure.hpp"
#include "tamecert/taming.hpp"

using namespace tamecert;
using namespace tamecert::reduction;
namespace tt = tamecert::testing;

namespace {

TamedTriple triple(const tt::Example& ex) { return TamedTriple::create(ex.g, *ex.omega, *ex.J); }

Subspace span(std::size_t n, std::initializer_list<std::size_t> idx) {
  std::vector<Vector> vs;
  for (auto i : idx) vs.push_back(unit_vector(n, i));
  return Subspace(n, vs);
}

}  // namespace

TEST_SUITE("tamed triples") {
  TEST_CASE("construction verifies all four properties") {
    for (const auto& ex : tt::tamed_examples()) {
      CAPTURE(ex.name);
      CHECK_NOTHROW(triple(ex));
    }
    // h3 + R with the nondegenerate closed form e14 + e23: omega(e1, Je1) = 0.
    TwoForm w(4);
    w.set(0, 3, 1);
    w.set(1, 2, 1);
    CHECK(TamedTriple::verify(tt::h3_r().g, w, *tt::h3_r().J).first_failure() == "taming");
    CHECK_THROWS_AS(TamedTriple::create(tt::h3_r().g, w, *tt::h3_r().J), NotTamed);
    CHECK(TamedTriple::verify(tt::h3_r().g, tt::standard_omega(4), *tt::h3_r().J).first_failure() == "closed");
    const auto s = tt::sol3_r_nonintegrable();
    CHECK_FALSE(TamedTriple::verify(s.g, tt::standard_omega(4), *s.J).integrable);
    CHECK_FALSE(TamedTriple::verify(tt::aff().g, *tt::aff().omega, Matrix::identity(2)).j_squared);
  }
}

TEST_SUITE("isotropic ideals") {
  TEST_CASE("tie-break") {
    CHECK(find_isotropic_ideal(tt::h3_r().g) == span(4, {2}));
    CHECK(find_isotropic_ideal(triple(tt::aff_power(2))) == span(4, {1}));
    CHECK(find_isotropic_ideal(triple(tt::abelian(2))) == span(2, {0}));
    auto sl2 = LieAlgebra::create({"h", "e", "f"}, {tt::br(0, 1, {{1, 2}}), tt::br(0, 2, {{2, -2}}), tt::br(1, 2, {{0, 1}})});
    CHECK_THROWS_AS(find_isotropic_ideal(sl2), NoOneDimIdeal);
  }

  TEST_CASE("symplectic perp") {
    const auto aff2 = triple(tt::aff_power(2));
    const auto r = omega_perp(aff2, span(4, {1}));
    CHECK(r.perp == span(4, {1, 2, 3}));
    CHECK(r.h_is_ideal);
    CHECK(r.perp_is_subalgebra);
    CHECK(omega_perp(triple(tt::abelian(2)), span(2, {0})).perp == span(2, {0}));

    TwoForm w(4);
    w.set(0, 3, 1);
    w.set(1, 2, 1);
    const auto h3 = omega_perp(tt::h3_r().g, w, span(4, {2}));
    CHECK(h3.perp.dim() == 3);
    CHECK(h3.perp.contains(unit_vector(4, 2)));
    CHECK_FALSE(h3.perp.contains(unit_vector(4, 1)));
  }

  TEST_CASE("decomposition") {
    const auto aff2 = triple(tt::aff_power(2));
    CHECK(check_decomposition(aff2, span(4, {1})).direct);
    TwoForm w(4);
    w.set(0, 2, 1);
    w.set(1, 3, 1);
    const auto bad = check_decomposition(tt::abelian(4).g, w, forms::ComplexStructure::standard(4), span(4, {0}));
    CHECK_FALSE(bad.direct);
    REQUIRE(bad.witness);
    CHECK(Subspace::line(*bad.witness) == span(4, {1}));
  }
}

TEST_SUITE("reduction") {
  TEST_CASE("aff(R)^2 reduces to aff(R)") {
    const auto step = reduce(triple(tt::aff_power(2)), span(4, {1}));
    const auto& red = step.reduced;
    CHECK(red.dim() == 2);
    CHECK(red.algebra().constant(0, 1, 1) == 1);
    CHECK(red.algebra().constant(0, 1, 0) == 0);
    CHECK(red.omega() == tt::standard_omega(2));
    CHECK(red.J().matrix() == tt::standard_j(2));
    CHECK(step.section_map.col(0) == unit_vector(4, 2));
    CHECK(step.section_map.col(1) == unit_vector(4, 3));
  }

  TEST_CASE("aff(R) reduces to a point") {
    const auto step = reduce(triple(tt::aff()), span(2, {1}));
    CHECK(step.perp == span(2, {1}));
    CHECK(step.reduced.dim() == 0);
  }

  TEST_CASE("R^4 reduces to a Kahler R^2") {
    const auto step = reduce(triple(tt::abelian(4)), span(4, {0}));
    CHECK(step.reduced.algebra().is_abelian());
    CHECK(step.reduced.dim() == 2);
    CHECK(forms::is_compatible(step.reduced.omega(), step.reduced.J()));
  }

  TEST_CASE("invalid ideals are rejected") {
    CHECK_THROWS_AS(reduce(triple(tt::aff()), span(2, {0})), NotAnIdeal);
    CHECK_THROWS_AS(reduce(triple(tt::abelian(4)), span(4, {0, 1})), DimensionMismatch);
  }

  TEST_CASE("towers") {
    const auto aff2 = reduction_tower(triple(tt::aff_power(2)));
    CHECK(aff2.steps.size() == 2);
    CHECK(aff2.complete);
    CHECK(aff2.terminal.dim() == 0);
    for (std::size_t n = 1; n <= 4; ++n) CHECK(reduction_tower(triple(tt::abelian(2 * n))).steps.size() == n);
    CHECK(reduction_tower(triple(tt::aff())).steps.size() == 1);
  }
}

TEST_SUITE("reduction properties") {
  TEST_CASE("every step is verified, unimodularity and dimensions behave") {
    for (const auto& ex : tt::tamed_examples()) {
      CAPTURE(ex.name);
      const auto t = triple(ex);
      const auto tower = reduction_tower(t);
      CHECK(tower.complete);
      std::size_t dim = t.dim();
      bool unimodular = is_unimodular(t.algebra()).unimodular;
      const LieAlgebra* current = &t.algebra();
      for (const auto& step : tower.steps) {
        const auto& r = step.reduced;
        CHECK(TamedTriple::verify(r.algebra(), r.omega(), r.J().matrix()).all());
        CHECK(r.dim() + 2 == dim);
        CHECK(is_subalgebra(*current, step.perp));
        CHECK(bracket_span(*current, step.h, step.h).is_zero());
        if (unimodular) CHECK(is_unimodular(r.algebra()).unimodular);
        dim = r.dim();
        unimodular = is_unimodular(r.algebra()).unimodular;
        current = &r.algebra();
      }
      CHECK(dim == 0);
    }
  }

  TEST_CASE("decomposition holds on every tamed triple and every line ideal") {
    for (const auto& ex : tt::tamed_examples()) {
      const auto t = triple(ex);
      for (const auto& line : one_dim_ideals(t.algebra())) {
        CHECK(check_decomposition(t, line).direct);
        CHECK_NOTHROW(reduce(t, line));
      }
    }
  }
}
