#include <random>
#include <set>

#include "doctest.h"
#include "mbfun/error.hpp"
#include "mbfun/multipoly.hpp"
#include "mbfun/rational.hpp"
#include "mbfun/unipoly.hpp"
#include "test_support.hpp"

using namespace mbfun;
using testing_support::q;
using testing_support::up;

TEST_CASE("rationals serialize as p/q and parse back") {
  CHECK(to_pq_string(Rational(-1)) == "-1/1");
  CHECK(to_pq_string(q("4/6")) == "2/3");
  CHECK(to_pq_string(Rational(0)) == "0/1");
  CHECK(parse_rational("-7/3") == Rational(-7, 3));
  CHECK(parse_rational("+5") == 5);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  for (const char* s : {"-1/1", "2/3", "0/1", "-12/5"}) CHECK(to_pq_string(parse_rational(s)) == s);
}

TEST_CASE("floor and fractional part") {
  CHECK(mbfun::floor(q("-1/3")) == -1);
  CHECK(fractional_part(q("-1/3")) == q("2/3"));
  CHECK(fractional_part(q("-1")) == 0);
  CHECK(fractional_part(q("7/2")) == q("1/2"));
}

TEST_CASE("rational_roots: factored input") {
  const auto p = (UniPoly::linear_root(-1).pow(2)) * UniPoly::linear_root(q("-1/2"));
  const auto f = rational_roots(p);
  REQUIRE(f.roots.size() == 2);
  CHECK(f.roots[0] == RootMultiplicity{-1, 2});
  CHECK(f.roots[1] == RootMultiplicity{q("-1/2"), 1});
  CHECK(f.remainder == UniPoly::constant(1));
}

TEST_CASE("rational_roots: no rational roots") {
  const auto p = up({"1", "0", "1"});
  const auto f = rational_roots(p);
  CHECK(f.roots.empty());
  CHECK(f.remainder == p);
}

TEST_CASE("rational_roots: 6s^2+5s+1 against brute-force evaluation") {
  const auto p = up({"1", "5", "6"});
  const auto f = rational_roots(p);
  // Independent search over small fractions.
  std::set<Rational> brute;
  for (int a = -12; a <= 12; ++a) {
    for (int b = 1; b <= 12; ++b) {
      Rational r(a, b);
      r.canonicalize();
      if (p.evaluate(r) == 0) brute.insert(r);
    }
  }
  std::set<Rational> found;
  for (const auto& rm : f.roots) found.insert(rm.root);
  CHECK(found == brute);
  CHECK(found == std::set<Rational>{q("-1/2"), q("-1/3")});
  CHECK(f.remainder == UniPoly::constant(6));
}

TEST_CASE("rational_roots re-expansion reproduces input") {
  std::mt19937 rng(testing_support::seed());
  std::uniform_int_distribution<int> small(-4, 4), den(1, 4), count(0, 4);
  for (int trial = 0; trial < 100; ++trial) {
    UniPoly p = UniPoly::constant(Rational(small(rng) == 0 ? 3 : small(rng) + 5));
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
      Rational r(small(rng), den(rng));
      r.canonicalize();
      p *= UniPoly::linear_root(r);
    }
    if (count(rng) % 2 == 0) p *= up({"2", "0", "1"});
    const auto f = rational_roots(p);
    CHECK(f.remainder * expand_roots(f.roots) == p);
    for (const auto& rm : f.roots) CHECK(f.remainder.evaluate(rm.root) != 0);
  }
}

TEST_CASE("poly_divides examples") {
  const auto s1 = UniPoly::linear_root(-1);
  const auto sh = UniPoly::linear_root(q("-1/2"));
  CHECK(poly_divides(s1, s1 * sh));
  CHECK_FALSE(poly_divides(sh, s1));
  CHECK_FALSE(poly_divides(s1 * s1, s1 * UniPoly::linear_root(-2)));
  CHECK_THROWS(poly_divides(UniPoly(), s1));
}

TEST_CASE("poly_divides antisymmetry on monic polynomials") {
  std::mt19937 rng(testing_support::seed() + 1);
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    auto random_monic = [&] {
      const int d = deg(rng);
      std::vector<Rational> c;
      for (int i = 0; i < d; ++i) c.emplace_back(coef(rng));
      c.emplace_back(1);
      return UniPoly(c);
    };
    const auto a = random_monic();
    const auto b = random_monic();
    if (poly_divides(a, b) && poly_divides(b, a)) CHECK(a == b);
    CHECK(poly_divides(a, a * b));
  }
}

TEST_CASE("gcd and monic") {
  const auto a = UniPoly::linear_root(-1) * UniPoly::linear_root(q("-1/3"));
  const auto b = UniPoly::linear_root(-1) * UniPoly::linear_root(2) * Rational(7);
  CHECK(gcd(a, b) == UniPoly::linear_root(-1));
  CHECK(gcd(a * Rational(5), UniPoly()) == a);
}

TEST_CASE("compose_linear gives p(-s-1)") {
  const auto theta = UniPoly::monomial(1);
  const auto b = theta.compose_linear(-1, -1).monic();
  CHECK(b == UniPoly::linear_root(-1));
}

TEST_CASE("BFunction keeps roots sorted and prints factored form") {
  const auto b = BFunction::from_poly(up({"1", "5", "6"}));
  CHECK(b.splits());
  CHECK(b.root_set() == std::vector<Rational>{q("-1/2"), q("-1/3")});
  CHECK(b.poly().leading_coefficient() == 1);
  CHECK(BFunction::from_roots({{-1, 2}}).to_string() == "(s+1)^2");
  CHECK_FALSE(BFunction::from_poly(up({"1", "0", "1"})).splits());
  CHECK_THROWS(BFunction::from_poly(UniPoly()));
}

namespace {

MultiPoly random_poly(std::mt19937& rng, const std::vector<std::string>& vars) {
  std::uniform_int_distribution<int> coef(-5, 5), e(0, 3), n(0, 5);
  MultiPoly p(vars);
  const int terms = n(rng);
  for (int i = 0; i < terms; ++i) {
    Exponent x(vars.size());
    for (auto& v : x) v = static_cast<std::uint32_t>(e(rng));
    Rational v(coef(rng), 1 + (i % 3));
    v.canonicalize();
    p.add_term(x, v);
  }
  return p;
}

bool no_zero_terms(const MultiPoly& p) {
  for (const auto& [e, c] : p.terms()) {
    if (c == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("MultiPoly ring axioms on random inputs") {
  std::mt19937 rng(testing_support::seed() + 2);
  const std::vector<std::string> vars{"x", "y", "s"};
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_poly(rng, vars);
    const auto b = random_poly(rng, vars);
    const auto c = random_poly(rng, vars);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(no_zero_terms(a * b - b * a + c));
  }
}

TEST_CASE("MultiPoly basics") {
  const std::vector<std::string> v{"x", "y"};
  const auto x = MultiPoly::variable(v, "x");
  const auto y = MultiPoly::variable(v, "y");
  const auto f = x.pow(2) + y.pow(2);
  CHECK(f.to_string() == "x^2 + y^2");
  CHECK(f.derivative(0) == x * Rational(2));
  CHECK(f.total_degree() == 2);
  MultiPoly quo;
  CHECK((f * (x - y)).divides_into(x - y, &quo));
  CHECK(quo == f);
  CHECK_FALSE(f.divides_into(x, nullptr));
  CHECK((x * Rational(-3, 2)).primitive() == x);
  const Rational pt[] = {2, 3};
  CHECK(f.evaluate(pt) == 13);
  CHECK(f.substitute(1, x) == x.pow(2) * Rational(2));
}

TEST_CASE("exponent overflow is a capability error") {
  MultiPoly p({"x"});
  p.add_term({4000000000u}, 1);
  CHECK_THROWS_AS(p * p, CapabilityError);
}
