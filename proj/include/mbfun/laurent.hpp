#pragma once

#include <map>
#include <string>
#include <vector>

#include "mbfun/multipoly.hpp"
#include "mbfun/weyl.hpp"

namespace mbfun {

// F, G and their partial derivatives over the variables x_1..x_n, s.
class LaurentContext {
 public:
  LaurentContext(const MultiPoly& F, const MultiPoly& G);

  const std::vector<std::string>& coordinates() const { return coords_; }
  // Variables of section numerators: coordinates followed by "s".
  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t s_index() const { return coords_.size(); }
  const MultiPoly& F() const { return F_; }
  const MultiPoly& G() const { return G_; }
  const MultiPoly& dF(std::size_t i) const { return dF_.at(i); }
  const MultiPoly& dG(std::size_t i) const { return dG_.at(i); }
  const MultiPoly& s() const { return s_; }
  // Cached powers.
  const MultiPoly& F_pow(unsigned k) const;
  const MultiPoly& G_pow(unsigned k) const;

  // D_n[s] with coordinates() and central "s".
  const SignaturePtr& operator_algebra() const { return ops_; }

 private:
  std::vector<std::string> coords_, vars_;
  MultiPoly F_, G_, s_;
  std::vector<MultiPoly> dF_, dG_;
  mutable std::vector<MultiPoly> Fp_, Gp_;
  SignaturePtr ops_;
};

// numerator * F^(-fpow) * G^(-gpow) * f^(s + shift), f = F/G.
struct LaurentSection {
  MultiPoly numerator;
  int fpow = 0;
  int gpow = 0;
  unsigned shift = 0;
};

LaurentSection make_section(const LaurentContext& ctx, const MultiPoly& numerator, int fpow,
                            int gpow, unsigned shift);

// f^(s+k) = F^k G^(-k) f^s: same section with shift 0.
LaurentSection renormalize(const LaurentSection& v);

// Sections rewritten over a common (fpow, gpow) with shift 0.
std::vector<LaurentSection> common_form(const LaurentContext& ctx, std::vector<LaurentSection> vs);

LaurentSection add_sections(const LaurentContext& ctx, const LaurentSection& a,
                            const LaurentSection& b);
bool sections_equal(const LaurentContext& ctx, const LaurentSection& a, const LaurentSection& b);
bool section_is_zero(const LaurentSection& v);

LaurentSection apply_derivation(const LaurentContext& ctx, std::size_t i, const LaurentSection& v);

// Exact action of P in D_n[s] (signature ctx.operator_algebra()).
LaurentSection apply_operator(const LaurentContext& ctx, const WeylElement& P,
                              const LaurentSection& v);

// Table of d^beta v for every beta with |beta| <= degree.
class DerivativeTable {
 public:
  DerivativeTable(const LaurentContext& ctx, LaurentSection v, unsigned degree);
  const LaurentSection& get(const Exponent& beta) const;
  const std::vector<Exponent>& exponents() const { return order_; }

 private:
  std::map<Exponent, LaurentSection> table_;
  std::vector<Exponent> order_;
};

// All exponent vectors of length n with sum <= degree, graded then lex.
std::vector<Exponent> exponents_up_to(std::size_t n, unsigned degree);

}  // namespace mbfun
