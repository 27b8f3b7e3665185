#include <random>

#include "doctest.h"
#include "mbfun/laurent.hpp"
#include "mbfun/oracle.hpp"
#include "test_support.hpp"

using namespace mbfun;
using testing_support::q;
using testing_support::up;

namespace {

MultiPoly var(const std::vector<std::string>& vars, const std::string& name) {
  return MultiPoly::variable(vars, name);
}

MultiPoly one(const std::vector<std::string>& vars) { return MultiPoly::constant(vars, 1); }

WeylElement op(const LaurentContext& ctx, const std::string& name) {
  return WeylElement::generator(ctx.operator_algebra(), name);
}

LaurentSection fs(const LaurentContext& ctx, unsigned k = 0) {
  return make_section(ctx, MultiPoly::constant(ctx.variables(), 1), 0, 0, k);
}

// Substitutes s = k in numerator / (F^fpow G^gpow) * (F/G)^(s+shift), for G = 1
// and fpow <= k + shift, giving a plain polynomial.
MultiPoly at_integer(const LaurentContext& ctx, const LaurentSection& v, unsigned k) {
  const auto vars = ctx.variables();
  MultiPoly p = v.numerator.substitute(ctx.s_index(), MultiPoly::constant(vars, k));
  const int e = static_cast<int>(k + v.shift) - v.fpow;
  REQUIRE(e >= 0);
  return p * ctx.F_pow(static_cast<unsigned>(e));
}

WeylElement random_operator(std::mt19937& rng, const SignaturePtr& sig) {
  std::uniform_int_distribution<int> coef(-3, 3), e(0, 2), n(1, 3);
  WeylElement r(sig);
  for (int i = n(rng); i > 0; --i) {
    Monomial m{};
    for (std::size_t k = 0; k < sig->size(); ++k) m[k] = static_cast<std::uint16_t>(e(rng));
    r.add_term(m, coef(rng));
  }
  return r;
}

}  // namespace

TEST_CASE("apply_operator examples") {
  const std::vector<std::string> xs{"x"}, xy{"x", "y"};
  {
    const LaurentContext ctx(var(xs, "x"), one(xs));
    const auto v = apply_operator(ctx, op(ctx, "dx"), fs(ctx));
    CHECK(sections_equal(ctx, v, make_section(ctx, ctx.s(), 1, 0, 0)));
    const auto killer = op(ctx, "x") * op(ctx, "dx") - op(ctx, "s");
    CHECK(section_is_zero(apply_operator(ctx, killer, fs(ctx))));
  }
  {
    const LaurentContext ctx(var(xy, "x"), var(xy, "y"));
    const auto v = apply_operator(ctx, op(ctx, "dx"), fs(ctx));
    CHECK(sections_equal(ctx, v, make_section(ctx, ctx.s(), 1, 0, 0)));
    CHECK(sections_equal(ctx, v, make_section(ctx, ctx.s() * var(ctx.variables(), "y"), 1, 1, 0)));
  }
}

TEST_CASE("renormalize and common form") {
  const std::vector<std::string> xy{"x", "y"};
  const LaurentContext ctx(var(xy, "x"), var(xy, "y"));
  const auto a = make_section(ctx, one(ctx.variables()), 0, 0, 2);
  const auto b = renormalize(a);
  CHECK(b.fpow == -2);
  CHECK(b.gpow == 2);
  CHECK(b.shift == 0);
  CHECK(sections_equal(ctx, a, b));
  const auto x2 = var(ctx.variables(), "x").pow(2);
  CHECK(sections_equal(ctx, a, make_section(ctx, x2, 0, 2, 0)));
  CHECK_FALSE(sections_equal(ctx, a, make_section(ctx, x2, 0, 1, 0)));
}

TEST_CASE("apply_operator agrees with polynomial differentiation at integer s") {
  std::mt19937 rng(testing_support::seed());
  const std::vector<std::string> xy{"x", "y"};
  const auto x = var(xy, "x"), y = var(xy, "y");
  const MultiPoly F = x * x + y * y * y + x * y;
  const LaurentContext ctx(F, one(xy));
  for (int trial = 0; trial < 20; ++trial) {
    const auto P = random_operator(rng, ctx.operator_algebra());
    const auto v = apply_operator(ctx, P, fs(ctx, 1));
    for (unsigned k = 3; k <= 4; ++k) {
      // P acting on F^(k+1) with s = k, computed directly.
      MultiPoly expect(ctx.variables());
      const auto Fk = F.pow(k + 1).with_variables(ctx.variables());
      for (const auto& [m, c] : P.terms()) {
        MultiPoly t = Fk;
        for (unsigned i = 0; i < m[2]; ++i) t = t.derivative(0);
        for (unsigned i = 0; i < m[3]; ++i) t = t.derivative(1);
        Exponent sh{m[0], m[1], 0};
        Rational sk = 1;
        for (unsigned i = 0; i < m[4]; ++i) sk *= k;
        expect += t.shifted(sh) * (c * sk);
      }
      CHECK(at_integer(ctx, v, k) == expect);
    }
  }
}

TEST_CASE("apply_operator is a module action") {
  std::mt19937 rng(testing_support::seed() + 1);
  const std::vector<std::string> xy{"x", "y"};
  const auto x = var(xy, "x"), y = var(xy, "y");
  const LaurentContext ctx(x * x - y, y + x * x * x);
  for (int trial = 0; trial < 15; ++trial) {
    const auto P = random_operator(rng, ctx.operator_algebra());
    const auto Q = random_operator(rng, ctx.operator_algebra());
    const auto v = fs(ctx, 1);
    CHECK(sections_equal(ctx, apply_operator(ctx, P * Q, v),
                         apply_operator(ctx, P, apply_operator(ctx, Q, v))));
  }
}

TEST_CASE("oracle examples") {
  const std::vector<std::string> xs{"x"}, xy{"x", "y"};
  const auto x = var(xs, "x");
  {
    auto w = verify_functional_equation(BFunction::from_poly(up({"1", "1"})), x, one(xs), 0, 1, 1);
    REQUIRE(w);
    const LaurentContext ctx(x, one(xs));
    CHECK(w->operators[0] == op(ctx, "dx"));
  }
  {
    const auto b = BFunction::from_poly(up({"1/2", "3/2", "1"}));
    auto w = verify_functional_equation(b, x * x, one(xs), 0, 1, 2);
    REQUIRE(w);
    const LaurentContext ctx(x * x, one(xs));
    CHECK(w->operators[0] == op(ctx, "dx").pow(2) * q("1/4"));
    CHECK(check_witness(*w, x * x, one(xs), 0));
  }
  {
    auto w = verify_functional_equation(BFunction::from_poly(up({"1", "1"})), var(xy, "x"),
                                        var(xy, "y"), 0, 1, 2);
    REQUIRE(w);
    CHECK(check_witness(*w, var(xy, "x"), var(xy, "y"), 0));
  }
}

TEST_CASE("oracle rejects proper divisors") {
  const std::vector<std::string> xs{"x"};
  const auto x = var(xs, "x");
  CHECK_FALSE(verify_functional_equation(BFunction::from_poly(up({"1", "1"})), x * x, one(xs), 0, 1, 4));
  CHECK_FALSE(verify_functional_equation(BFunction::from_poly(up({"1/2", "1"})), x * x, one(xs), 0, 1, 4));
  CHECK_FALSE(verify_functional_equation(BFunction::from_poly(up({"1"})), x, one(xs), 0, 3, 4));
}

TEST_CASE("unknown monic b search") {
  const std::vector<std::string> xs{"x"};
  const auto x = var(xs, "x");
  EquationSearch s;
  s.F = x * x * x;
  s.G = one(xs);
  s.N = 1;
  s.op_degree = 3;
  s.s_degree = 0;
  s.b_degree = 3;
  auto w = search_functional_equation(s);
  REQUIRE(w);
  CHECK(BFunction::from_poly(w->b).to_string() == "(s+1/3)*(s+2/3)*(s+1)");
  s.b_degree = 2;
  CHECK_FALSE(search_functional_equation(s));
}
