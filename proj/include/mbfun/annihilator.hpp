#pragma once

#include <string>
#include <vector>

#include "mbfun/groebner.hpp"
#include "mbfun/multipoly.hpp"
#include "mbfun/unipoly.hpp"
#include "mbfun/weyl.hpp"

namespace mbfun {

// prod_i F_i^{s_i}
struct PowerProduct {
  std::vector<MultiPoly> factors;
  std::vector<std::string> s_names;  // defaults to s (one factor) or s1, s2, ...
};

// Coordinates shared by a list of polynomials: the sorted union of their
// declared variables.
std::vector<std::string> common_coordinates(const std::vector<MultiPoly>& polys);

// Ann_{D[s_1..s_k]} prod F_i^{s_i}, via the Oaku-Takayama elimination with one
// extra coordinate t_j and auxiliary central pair (u_j, v_j) per factor.
LeftIdeal ann_fs(const PowerProduct& p);

// Monic generator of (Ann F^s + D[s] F) cap Q[s].
BFunction bernstein_sato(const MultiPoly& F);

// gcd of two polynomials (primitive, positive leading coefficient), computed
// from lcm(F,G) = <y F, (1-y) G> cap Q[x].
MultiPoly polynomial_gcd(const MultiPoly& F, const MultiPoly& G);
bool coprime(const MultiPoly& F, const MultiPoly& G);

struct SabbahLineResult {
  BFunction b;
  // Generators of the Bernstein-Sato ideal of (F, G) in Q[s1, s2].
  std::vector<MultiPoly> ideal;
};

// Specialization s1 = s, s2 = -s-m-2 of the Bernstein-Sato ideal of (F, G).
// Throws MathError on non-coprime input or when the ideal vanishes on the line.
SabbahLineResult sabbah_line(const MultiPoly& F, const MultiPoly& G, unsigned m);

// [theta]_mu = theta (theta - 1) ... (theta - mu + 1) with theta = -s - 1.
UniPoly falling_factorial_in_s(unsigned mu);

}  // namespace mbfun
