#pragma once

#include <string>
#include <vector>

#include "mbfun/groebner.hpp"
#include "mbfun/multipoly.hpp"
#include "mbfun/unipoly.hpp"
#include "mbfun/weyl.hpp"

namespace mbfun {

// Annihilator of sigma_m = G^{-m} delta(t - F/G) in D(x, t).
struct SigmaPresentation {
  SignaturePtr signature;  // coordinates x_1..x_n, t
  LeftIdeal annihilator;
  unsigned m = 0;
  // Largest operator degree searched for annihilators beyond the seeds (0: seeds only).
  unsigned kernel_degree = 0;
  // True when the annihilator is known to be complete (G constant).
  bool exact = false;
};

// tG - F and G^2 d_i + m G G_i + (F_i G - F G_i) dt.
std::vector<WeylElement> sigma_seeds(const MultiPoly& F, const MultiPoly& G, unsigned m,
                                     const SignaturePtr& sig);

// Seeds plus every annihilating operator of total degree <= kernel_degree,
// found as the kernel of the action on the free O[1/G]-module with basis
// dt^k delta.  kernel_degree 0 picks the seed degree plus one.  When G is
// constant the seeds already generate the annihilator.
SigmaPresentation build_sigma(const MultiPoly& F, const MultiPoly& G, unsigned m,
                              unsigned kernel_degree = 0);

// Monic generator p(theta), theta = t dt, of in_{(-1,1)}(annihilator) cap Q[theta].
// Throws MathError when that intersection is zero.
UniPoly b_section_along_t(const SigmaPresentation& pres);

// p(-s-1), made monic.
BFunction b_from_theta(const UniPoly& p);

// Result of applying a D(x,t) operator to sigma_m, as G^{-e} sum_k p_k dt^k delta.
struct SigmaModelElement {
  unsigned e = 0;
  std::vector<MultiPoly> p;  // over the coordinates of F and G
};
SigmaModelElement apply_to_sigma(const MultiPoly& F, const MultiPoly& G, unsigned m,
                                 const WeylElement& P);
bool model_is_zero(const SigmaModelElement& v);

}  // namespace mbfun
