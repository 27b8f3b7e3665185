#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mbfun/weyl.hpp"

namespace mbfun {

// Total-degree cap for Groebner computations, from MBFUN_MAX_DEGREE (default 24).
std::uint32_t max_groebner_degree();

// Weight rows compared lexicographically, then a tiebreak term order.  On a
// homogenized signature total degree is compared before the rows.
class MonomialOrder {
 public:
  enum class Tiebreak { DegRevLex, Lex };

  MonomialOrder() = default;
  MonomialOrder(SignaturePtr sig, std::vector<std::vector<std::int64_t>> rows,
                Tiebreak tiebreak = Tiebreak::DegRevLex);

  static MonomialOrder degrevlex(SignaturePtr sig);
  static MonomialOrder lex(SignaturePtr sig);
  // Weight vector w first, then degrevlex.
  static MonomialOrder weighted(SignaturePtr sig, std::vector<std::int64_t> w);
  // Block order: any monomial involving a dropped generator beats every
  // monomial free of them.
  static MonomialOrder elimination(SignaturePtr sig, const std::vector<std::size_t>& drop);

  const SignaturePtr& signature() const { return sig_; }
  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }

  // Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  // Throws std::invalid_argument unless the order is a well-order compatible
  // with the relation table.
  void validate() const;

 private:
  SignaturePtr sig_;
  std::vector<std::vector<std::int64_t>> rows_;
  Tiebreak tiebreak_ = Tiebreak::DegRevLex;
};

struct LeftIdeal {
  SignaturePtr signature;
  std::vector<WeylElement> generators;
};

class GroebnerBasis {
 public:
  GroebnerBasis(MonomialOrder order, std::vector<WeylElement> elements);

  const MonomialOrder& order() const { return order_; }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const SignaturePtr& signature() const { return order_.signature(); }

  // Fully reduced remainder of e.
  WeylElement normal_form(const WeylElement& e) const;
  bool contains(const WeylElement& e) const { return normal_form(e).is_zero(); }
  bool contains_one() const;

  LeftIdeal ideal() const { return {signature(), elements_}; }

 private:
  MonomialOrder order_;
  std::vector<WeylElement> elements_;
};

Monomial leading_monomial(const WeylElement& e, const MonomialOrder& order);

// Reduced left Groebner basis with primitive integer coefficients and
// positive leading coefficients.
GroebnerBasis groebner_left(const LeftIdeal& ideal, const MonomialOrder& order);

// I intersected with the subalgebra on the remaining generators.  `drop` may
// contain coordinate/derivation pairs and central variables (any variables for
// a commutative signature).
LeftIdeal eliminate(const LeftIdeal& ideal, const std::vector<std::string>& drop);

using WeightMap = std::map<std::string, std::int64_t>;

// Highest-weight part of e; generators missing from w have weight 0.
WeylElement initial_form(const WeylElement& e, const WeightMap& w);
std::int64_t weight_degree(const WeylElement& e, const WeightMap& w);

// Ideal of w-initial forms.  Every coordinate/derivation pair must have
// w(x) + w(dx) = 0, so the initial forms live in the same algebra.
LeftIdeal initial_ideal_weight(const LeftIdeal& ideal, const WeightMap& w);

WeylElement homogenize(const WeylElement& e, const SignaturePtr& homogenized);

}  // namespace mbfun
