#pragma once

#include <cstdint>
#include <string>

#include "mbfun/multipoly.hpp"
#include "mbfun/rational.hpp"
#include "mbfun/unipoly.hpp"

namespace testing_support {

// Seed for randomized property tests; set with --seed N or MBFUN_SEED.
std::uint32_t seed();

inline mbfun::Rational q(const char* text) { return mbfun::parse_rational(text); }

// Univariate polynomial from coefficients listed by increasing degree.
inline mbfun::UniPoly up(std::initializer_list<const char*> coeffs) {
  std::vector<mbfun::Rational> v;
  for (auto c : coeffs) v.push_back(q(c));
  return mbfun::UniPoly(std::move(v));
}

}  // namespace testing_support
