#include <random>

#include "doctest.h"
#include "mbfun/multiplier.hpp"
#include "mbfun/nc_resolution.hpp"
#include "test_support.hpp"

using namespace mbfun;
using testing_support::q;

namespace {

NCChart chart(std::vector<std::int64_t> a, std::vector<std::int64_t> b) {
  NCChart c;
  c.label = "c";
  c.kappa.assign(a.size(), 0);
  c.a = std::move(a);
  c.b = std::move(b);
  return c;
}

RationalSet rs(std::initializer_list<const char*> xs) {
  RationalSet out;
  for (auto x : xs) out.insert(q(x));
  return out;
}

std::vector<Rational> rv(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (auto x : xs) out.push_back(q(x));
  return out;
}

}  // namespace

TEST_CASE("roots_nc examples") {
  CHECK(roots_nc(chart({3, 0}, {0, 2}), 0) == rs({"-1/3", "-2/3", "-1"}));
  CHECK(roots_nc(chart({2, 0}, {1, 0}), 2) == rs({"1"}));
  CHECK(roots_nc(chart({0, 1}, {1, 0}), 5) == rs({"-1"}));
  for (int m : {0, 1, 7}) CHECK(roots_nc(chart({1, 1}, {2, 3}), m).empty());
}

TEST_CASE("roots_nc range for m = 0") {
  std::mt19937 rng(testing_support::seed());
  std::uniform_int_distribution<int> e(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = chart({e(rng) + 1, e(rng)}, {e(rng), e(rng)});
    for (const auto& r : roots_nc(c, 0)) {
      CHECK(r >= -1);
      CHECK(r < 0);
    }
    for (int m = 0; m <= 3; ++m) {
      std::int64_t bmax = std::max(c.b[0], c.b[1]);
      for (const auto& r : roots_nc(c, m)) CHECK(r <= Rational(static_cast<long>(m * bmax)));
    }
  }
}

TEST_CASE("bound_set and member") {
  CHECK(bound_set({chart({3, 0}, {0, 2})}, 0).residues == rs({"-1/3", "-2/3", "-1"}));
  CHECK(bound_set({chart({2}, {0}), chart({3}, {0})}, 0).residues == rs({"-1/2", "-1", "-1/3", "-2/3"}));
  const auto empty = bound_set({chart({1, 1}, {2, 3})}, 0);
  CHECK(empty.residues.empty());
  CHECK_FALSE(member(empty, q("-1")));
  CHECK(member({rs({"-1/3"})}, q("-7/3")));
  CHECK_FALSE(member({rs({"-1/3"})}, q("-2/3")));
  CHECK(member({rs({"1"})}, q("0")));
  // Monotone under union.
  CHECK(member({rs({"-1/3", "1/2"})}, q("-7/3")));
  CHECK_THROWS_AS(bound_set({}, 0), std::invalid_argument);
}

TEST_CASE("eigenvalue classes") {
  CHECK(eigenvalue_classes(rv({"-1/3", "-2/3", "-1"})) == rs({"2/3", "1/3", "0"}));
  CHECK(eigenvalue_classes(rv({"-1"})) == rs({"0"}));
  CHECK(eigenvalue_classes(rv({"1", "-1"})) == rs({"0"}));
  CHECK(eigenvalue_classes(rv({"-7/5", "3/5"})) == eigenvalue_classes(rv({"-2/5", "-17/5"})));
}

TEST_CASE("check_lemma4 examples") {
  CHECK(check_lemma4(rv({"-1"}), rv({"-1"}), 5) == std::optional<std::int64_t>(0));
  CHECK(check_lemma4(rv({"-7/3"}), rv({"-1/3"}), 5) == std::optional<std::int64_t>(2));
  CHECK_FALSE(check_lemma4(rv({"-1/2"}), rv({"-1/3"}), 5));
  CHECK_FALSE(check_lemma4(rv({"-7/3"}), rv({"-1/3"}), 1));
}

TEST_CASE("chart JSON round trip and validation") {
  const std::vector<NCChart> charts{chart({3, 0}, {0, 2}), chart({1}, {0})};
  const auto text = charts_to_json(charts);
  CHECK(parse_charts(text) == charts);
  CHECK(charts_to_json(parse_charts(text)) == text);
  CHECK_THROWS_AS(parse_charts(R"({"charts":[{"label":"p","a":[1,2],"b":[0],"kappa":[0,0]}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_charts(R"({"charts":[{"label":"p","a":[0],"b":[0],"kappa":[0]}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_charts(R"({"charts":[{"label":"p","a":[-1],"b":[0],"kappa":[0]}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_charts("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_charts(R"({"charts":[]})"), std::invalid_argument);
}

TEST_CASE("multiplier ideal examples") {
  CHECK(multiplier_ideal_nc(chart({2}, {0}), q("1/4")).is_unit());
  CHECK(multiplier_ideal_nc(chart({2}, {0}), q("1/2")) == MonomialIdeal(1, {{1}}));
  const auto I = multiplier_ideal_nc(chart({3, 0}, {0, 2}), q("2/3"));
  CHECK(I == MonomialIdeal(2, {{2, 0}}));
  CHECK(I.to_string({"x", "y"}) == "(x^2)");
  CHECK_THROWS_AS(multiplier_ideal_nc(chart({2}, {0}), q("0")), std::invalid_argument);
}

TEST_CASE("multiplier ideals shrink and start at the unit ideal") {
  std::mt19937 rng(testing_support::seed() + 7);
  std::uniform_int_distribution<int> e(0, 5), num(1, 40), den(1, 12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = chart({e(rng), e(rng) + 1}, {e(rng), e(rng)});
    Rational a1(num(rng), den(rng)), a2(num(rng), den(rng));
    a1.canonicalize();
    a2.canonicalize();
    if (a2 < a1) std::swap(a1, a2);
    CHECK(multiplier_ideal_nc(c, a1).contains(multiplier_ideal_nc(c, a2)));
    // Jump set depends only on the positive part of a - b.
    auto shifted = c;
    for (auto& v : shifted.a) v += 2;
    for (auto& v : shifted.b) v += 2;
    CHECK(jumping_numbers_nc(c, 3).jumps == jumping_numbers_nc(shifted, 3).jumps);
    const auto rep = jumping_numbers_nc(c, 3);
    if (rep.lct) {
      CHECK(multiplier_ideal_nc(c, *rep.lct / 2).is_unit());
    }
  }
}

TEST_CASE("jumping numbers examples") {
  const auto r1 = jumping_numbers_nc(chart({2}, {0}), 1);
  CHECK(r1.jumps == rv({"1/2", "1"}));
  CHECK(r1.lct == q("1/2"));
  CHECK(jumping_numbers_nc(chart({3, 0}, {0, 2}), 1).jumps == rv({"1/3", "2/3", "1"}));
  CHECK(jumping_numbers_nc(chart({0, 1}, {1, 0}), 2).jumps == rv({"1", "2"}));
  CHECK(default_jump_upper(chart({3, 0}, {0, 2})) == 5);
  const auto r2 = jumping_numbers_nc(chart({2}, {0}), 3);
  for (std::size_t k = 1; k < r2.ideals.size(); ++k) {
    CHECK(r2.ideals[k - 1].contains(r2.ideals[k]));
    CHECK_FALSE(r2.ideals[k].contains(r2.ideals[k - 1]));
  }
}

TEST_CASE("check_cor_jump examples") {
  const auto b2 = BFunction::from_roots({{q("-1/2"), 1}, {q("-1"), 1}});
  const auto b3 = BFunction::from_roots({{q("-1/3"), 1}, {q("-2/3"), 1}, {q("-1"), 1}});
  CHECK(check_cor_jump(jumping_numbers_nc(chart({2}, {0}), 1), b2));
  CHECK(check_cor_jump(jumping_numbers_nc(chart({3, 0}, {0, 2}), 1), b3));
  JumpReport half;
  half.jumps = rv({"1/2"});
  half.lct = q("1/2");
  CHECK_FALSE(check_cor_jump(half, BFunction::from_roots({{q("-1"), 1}})));
}

TEST_CASE("is_in_multiplier_ideal examples") {
  const std::vector<std::string> x{"x"}, xy{"x", "y"};
  CHECK(is_in_multiplier_ideal(MultiPoly::variable(x, "x"), q("1/2"), chart({2}, {0})));
  CHECK_FALSE(is_in_multiplier_ideal(MultiPoly::constant(x, 1), q("1/2"), chart({2}, {0})));
  CHECK_FALSE(is_in_multiplier_ideal(MultiPoly::variable({"y"}, "y").pow(9), 10, chart({0, 1}, {1, 0})));
  CHECK(is_in_multiplier_ideal(MultiPoly::variable({"y"}, "y").pow(10), 10, chart({0, 1}, {1, 0})));
}
