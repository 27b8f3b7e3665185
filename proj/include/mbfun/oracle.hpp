#pragma once

#include <optional>
#include <vector>

#include "mbfun/laurent.hpp"
#include "mbfun/multipoly.hpp"
#include "mbfun/unipoly.hpp"
#include "mbfun/weyl.hpp"

namespace mbfun {

// Shape of a bounded search for
//   b(s) G^e (f^s / G^m) = sum_{k=1}^N P_k(s) (f^{s+k} / G^m),  f = F/G,
// with P_k in D_n[s] of operator degree <= op_degree and s-degree <= s_degree.
struct EquationSearch {
  MultiPoly F, G;
  unsigned m = 0;
  unsigned N = 1;
  unsigned op_degree = 1;
  unsigned s_degree = 0;
  unsigned g_multiplier = 0;  // e
  // Fixed b, or an unknown monic b of degree b_degree when empty.
  std::optional<UniPoly> b;
  unsigned b_degree = 0;
};

struct EquationWitness {
  UniPoly b;
  unsigned g_multiplier = 0;
  std::vector<WeylElement> operators;  // P_1..P_N in D_n[s]
};

// Solves the linear system for the unknown coefficients and verifies any
// solution exactly in the Laurent module. Empty result: no solution within
// the bounds.
std::optional<EquationWitness> search_functional_equation(const EquationSearch& q);

// b(s) (f^s/G^m) = sum_{k=1}^N P_k(s) (f^{s+k}/G^m) with both degree bounds deg.
std::optional<EquationWitness> verify_functional_equation(const BFunction& b, const MultiPoly& F,
                                                          const MultiPoly& G, unsigned m,
                                                          unsigned N, unsigned deg);

// True if the witness satisfies its equation exactly.
bool check_witness(const EquationWitness& w, const MultiPoly& F, const MultiPoly& G, unsigned m);

}  // namespace mbfun
