#include "doctest.h"
#include "mbfun/annihilator.hpp"
#include "mbfun/error.hpp"
#include "mbfun/mero.hpp"
#include "mbfun/sigma.hpp"
#include "test_support.hpp"

using namespace mbfun;
using testing_support::up;

namespace {

const std::vector<std::string> kXY{"x", "y"};
const MultiPoly X = MultiPoly::variable(kXY, "x");
const MultiPoly Y = MultiPoly::variable(kXY, "y");
const MultiPoly ONE = MultiPoly::constant(kXY, 1);

// Expected product prod_{k=1}^a (s + k/a).
BFunction classical_monomial(unsigned a) {
  UniPoly p = UniPoly::constant(1);
  for (unsigned k = 1; k <= a; ++k) p *= UniPoly::linear_root(-Rational(k) / a);
  return BFunction::from_poly(p);
}

WeylElement gen(const SignaturePtr& sig, const std::string& name) { return WeylElement::generator(sig, name); }

}  // namespace

TEST_CASE("sigma seeds annihilate sigma_m") {
  for (unsigned m : {0u, 1u, 3u}) {
    for (const auto& [F, G] : std::vector<std::pair<MultiPoly, MultiPoly>>{
             {X, Y}, {X * X * X, Y * Y}, {X * X + Y * Y, X}, {X * Y + Y * Y * Y, X - Y + ONE}}) {
      const auto pres = build_sigma(F, G, m, 1);
      for (const auto& s : sigma_seeds(F, G, m, pres.signature)) {
        CHECK(model_is_zero(apply_to_sigma(F, G, m, s)));
      }
      for (const auto& g : pres.annihilator.generators) CHECK(model_is_zero(apply_to_sigma(F, G, m, g)));
    }
  }
}

TEST_CASE("build_sigma examples") {
  const std::vector<std::string> xs{"x"};
  const auto x = MultiPoly::variable(xs, "x");
  const auto pres = build_sigma(x, MultiPoly::constant(xs, 1), 0);
  CHECK(pres.exact);
  const auto& sig = pres.signature;
  const GroebnerBasis gb(MonomialOrder::degrevlex(sig), pres.annihilator.generators);
  CHECK(gb.contains(gen(sig, "t") - gen(sig, "x")));
  CHECK(gb.contains(gen(sig, "dx") + gen(sig, "dt")));
  const auto expected = groebner_left({sig, {gen(sig, "t") - gen(sig, "x"), gen(sig, "dx") + gen(sig, "dt")}},
                                      MonomialOrder::degrevlex(sig));
  CHECK(expected.elements() == pres.annihilator.generators);

  // G = 1 makes sigma_m independent of m.
  CHECK(build_sigma(x * x, MultiPoly::constant(xs, 1), 5).annihilator.generators ==
        build_sigma(x * x, MultiPoly::constant(xs, 1), 0).annihilator.generators);

  const auto p2 = build_sigma(X, Y, 0);
  const GroebnerBasis gb2(MonomialOrder::degrevlex(p2.signature), p2.annihilator.generators);
  const auto& s2 = p2.signature;
  CHECK(gb2.contains(gen(s2, "t") * gen(s2, "y") - gen(s2, "x")));
  CHECK(gb2.contains(gen(s2, "y") * gen(s2, "y") * gen(s2, "dx") + gen(s2, "y") * gen(s2, "dt")));
  CHECK(gb2.contains(gen(s2, "y") * gen(s2, "y") * gen(s2, "dy") - gen(s2, "x") * gen(s2, "dt")));
  // Saturation: y dx + dt is not a seed but annihilates sigma_0.
  CHECK(gb2.contains(gen(s2, "y") * gen(s2, "dx") + gen(s2, "dt")));
}

TEST_CASE("b along t examples") {
  const std::vector<std::string> xs{"x"};
  const auto x = MultiPoly::variable(xs, "x");
  const auto one = MultiPoly::constant(xs, 1);
  CHECK(b_section_along_t(build_sigma(x, one, 0)) == up({"0", "1"}));
  CHECK(b_section_along_t(build_sigma(x * x, one, 0)) == up({"0", "1/2", "1"}));
  CHECK(b_from_theta(b_section_along_t(build_sigma(X, Y, 0))).to_string() == "(s+1)");
}

TEST_CASE("b_mero examples") {
  for (unsigned m : {0u, 1u, 2u}) {
    const auto r = b_mero(X, Y, m);
    CHECK(r.b.to_string() == "(s+1)");
    CHECK(r.status == Certification::Certified);
  }
  const auto r = b_mero(X * X * X, Y * Y, 0);
  CHECK(r.b == classical_monomial(3));
  CHECK(r.status == Certification::Certified);
  REQUIRE(r.witness);
  CHECK(check_witness(*r.witness, X * X * X, Y * Y, 0));
  CHECK(b_mero(X, ONE, 7).b.to_string() == "(s+1)");
}

TEST_CASE("b_mero with G = 1 matches the classical b-function") {
  for (const auto& F : {X, X * X, X * X + Y * Y}) {
    const auto classical = bernstein_sato(F);
    for (unsigned m : {0u, 3u}) CHECK(b_mero(F, ONE, m).b == classical);
  }
}

TEST_CASE("b_mero input errors") {
  CHECK_THROWS_AS(b_mero(X * Y, X, 0), MathError);
  CHECK_THROWS_AS(b_mero(ONE, X, 0), MathError);
}

TEST_CASE("b_simple examples and divisibility") {
  CHECK(b_simple(X, ONE, 0).b.to_string() == "(s+1)");
  const auto s = b_simple(X, Y, 0);
  CHECK(poly_divides(UniPoly::linear_root(-1), s.b.poly()));
  CHECK(b_simple(X * X, ONE, 3).b == classical_monomial(2));
  const auto m = b_mero(X * X, Y, 1);
  CHECK(poly_divides(m.b.poly(), b_simple(X * X, Y, 1).b.poly()));
}

TEST_CASE("smoothness test") {
  CHECK(smoothness_test(X * X + Y * Y, X));
  CHECK_FALSE(smoothness_test(X * X * X, Y * Y));
  CHECK(smoothness_test(X, ONE));
}

TEST_CASE("reduced b-function") {
  CHECK(reduced_b(X * X + Y * Y, X, {1, 1}, 2, 1).b.to_string() == "(s+1)");
  const std::vector<std::string> xs{"x"};
  CHECK(reduced_b(MultiPoly::variable(xs, "x"), MultiPoly::constant(xs, 1), {1}, 1, 0).b.to_string() == "(s+1)");
  const auto r = reduced_b(X * X * X, Y * Y, {1, 1}, 3, 2);
  CHECK(r.b == classical_monomial(3));
  REQUIRE(r.witness);
  CHECK(check_witness(*r.witness, X * X * X, Y * Y, 0));
  CHECK(poly_divides(r.b.poly(), b_mero(X * X * X, Y * Y, 0).b.poly()));
  CHECK_THROWS_AS(reduced_b(X * X + Y, X, {1, 1}, 2, 1), MathError);
  CHECK(quasi_degrees(X * X + Y, X, {1, 2}) == std::pair<std::int64_t, std::int64_t>{2, 1});
}

TEST_CASE("sabbah line is divisible by b_mero") {
  for (const auto& [F, G] : std::vector<std::pair<MultiPoly, MultiPoly>>{{X, Y}, {X * X * X, Y * Y}, {X * X, Y}}) {
    for (unsigned m : {0u, 1u}) {
      const auto sab = sabbah_line(F, G, m);
      CHECK(poly_divides(b_mero(F, G, m).b.poly(), sab.b.poly()));
    }
  }
}
