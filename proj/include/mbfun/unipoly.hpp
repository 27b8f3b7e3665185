#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mbfun/multipoly.hpp"
#include "mbfun/rational.hpp"

namespace mbfun {

// Dense univariate polynomial over Q; coeffs_[i] is the coefficient of s^i.
// Trailing zeros are never stored, so the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(const Rational& c);
  static UniPoly monomial(std::size_t degree, const Rational& c = 1);
  // s - r
  static UniPoly linear_root(const Rational& r);
  // Converts a MultiPoly in at most one variable with nonzero degree.
  static UniPoly from_multipoly(const MultiPoly& p);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational leading_coefficient() const;
  Rational coefficient(std::size_t i) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  Rational evaluate(const Rational& x) const;
  // p(a*s + b)
  UniPoly compose_linear(const Rational& a, const Rational& b) const;
  UniPoly monic() const;
  UniPoly pow(unsigned k) const;

  // Euclidean division; divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

  MultiPoly to_multipoly(const std::string& var) const;
  std::string to_string(const std::string& var = "s") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

UniPoly gcd(UniPoly a, UniPoly b);

struct RootMultiplicity {
  Rational root;
  int multiplicity = 0;
  friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

struct RationalFactorization {
  std::vector<RootMultiplicity> roots;  // ascending by root
  UniPoly remainder;                    // no rational roots
};

// p = remainder * prod (s - r)^mult.  Candidates come from the rational root
// theorem applied to the primitive integer form of p.
RationalFactorization rational_roots(const UniPoly& p);

// True iff b = a * q for some q over Q.  `a` must be nonzero.
bool poly_divides(const UniPoly& a, const UniPoly& b);

// prod (s - r)^mult.
UniPoly expand_roots(const std::vector<RootMultiplicity>& roots);

// A monic univariate polynomial in s together with its rational roots when it
// splits over Q.
class BFunction {
 public:
  BFunction() = default;
  // Normalizes to monic.  Throws std::invalid_argument on the zero polynomial.
  static BFunction from_poly(const UniPoly& p);
  static BFunction from_roots(const std::vector<RootMultiplicity>& roots);

  const UniPoly& poly() const { return poly_; }
  const std::optional<std::vector<RootMultiplicity>>& roots() const { return roots_; }
  bool splits() const { return roots_.has_value(); }
  int degree() const { return poly_.degree(); }
  // Distinct roots, ascending.  Empty when the polynomial does not split.
  std::vector<Rational> root_set() const;
  // Each root repeated by multiplicity, ascending.
  std::vector<Rational> root_multiset() const;

  friend bool operator==(const BFunction& a, const BFunction& b) { return a.poly_ == b.poly_; }
  std::string to_string() const;

 private:
  UniPoly poly_;
  std::optional<std::vector<RootMultiplicity>> roots_;
};

}  // namespace mbfun
