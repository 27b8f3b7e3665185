#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mbfun/multipoly.hpp"
#include "mbfun/oracle.hpp"
#include "mbfun/unipoly.hpp"

namespace mbfun {

enum class Certification { Certified, Uncertified, Failed };
std::string to_string(Certification c);

struct CertifyBounds {
  unsigned N = 3;
  unsigned deg = 6;
};

struct MeroOptions {
  CertifyBounds bounds;
  // Largest operator degree for the annihilator kernel search; 0 means the
  // seed degree plus four.
  unsigned max_kernel_degree = 0;
};

struct MeroResult {
  BFunction b;
  Certification status = Certification::Failed;
  // Witness at the smallest N <= bounds.N that works.
  std::optional<EquationWitness> witness;
  unsigned witness_N = 0;
  // Annihilator search degree used (0 when G is constant).
  unsigned kernel_degree = 0;
  std::vector<std::string> notes;
};

// b^mero_{f,m} of f = F/G through the V-filtration along t = 0 of
// G^{-m} delta(t - f), certified by the functional-equation oracle: a witness
// exists and no b/(s - r) admits one at the same bounds.  Throws MathError on
// non-coprime input or when the engine and the oracle disagree on a complete
// annihilator.
MeroResult b_mero(const MultiPoly& F, const MultiPoly& G, unsigned m, const MeroOptions& opts = {});

// Minimal monic b with b(s) f^s/G^m in D[s] f^{s+1}/G^m, searched by degree
// starting at deg b_mero; a multiple of b_mero by construction.
MeroResult b_simple(const MultiPoly& F, const MultiPoly& G, unsigned m, const MeroOptions& opts = {});

// Checks v F = d1 F and v G = d2 G for v = sum w_i x_i d_i (weights indexed
// by the sorted union of the variables of F and G).
bool is_quasi_homogeneous(const MultiPoly& F, const MultiPoly& G, const std::vector<std::int64_t>& w,
                          std::int64_t d1, std::int64_t d2);
// d1, d2 with v F = d1 F, v G = d2 G, if they exist.
std::optional<std::pair<std::int64_t, std::int64_t>> quasi_degrees(const MultiPoly& F, const MultiPoly& G,
                                                                   const std::vector<std::int64_t>& w);

// G vanishes on the common zeros of h_i = F_i G - F G_i, i.e. 1 is in
// <h_1..h_n, 1 - z G>.
bool smoothness_test(const MultiPoly& F, const MultiPoly& G);

// Reduced b-function for quasi-homogeneous f: s + 1 when smoothness_test
// passes, otherwise the minimal monic b with G^e b(s) f^s = Q f^{s+1}, Q in D_n.
// Throws MathError when the quasi-homogeneity check fails.
MeroResult reduced_b(const MultiPoly& F, const MultiPoly& G, const std::vector<std::int64_t>& w,
                     std::int64_t d1, std::int64_t d2, const MeroOptions& opts = {});

// Oracle certification of a candidate: witness at the smallest N <= bounds.N,
// and failure for every b/(s - r).  Fills status, witness and notes.
void certify(MeroResult& r, const MultiPoly& F, const MultiPoly& G, unsigned m, const CertifyBounds& bounds);

}  // namespace mbfun
