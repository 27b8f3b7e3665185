#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mbfun/rational.hpp"

namespace mbfun {

using Exponent = std::vector<std::uint32_t>;

// Degree-reverse-lexicographic comparison; a < b means a is the smaller
// monomial.  Used as the storage order so equal polynomials are equal maps.
struct DegRevLexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

std::uint32_t checked_add(std::uint32_t a, std::uint32_t b);

// Sparse multivariate polynomial over Q in a fixed ordered list of variables.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rational, DegRevLexLess>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables);

  static MultiPoly constant(std::vector<std::string> variables, const Rational& c);
  static MultiPoly variable(std::vector<std::string> variables, std::size_t index);
  static MultiPoly variable(std::vector<std::string> variables, const std::string& name);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t num_variables() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }

  // Adds c * x^e; zero results are erased.
  void add_term(const Exponent& e, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  // Coefficient of x^e (zero when absent).
  Rational coefficient(const Exponent& e) const;
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  // Largest term in degrevlex.
  const std::pair<const Exponent, Rational>& leading_term() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned k) const;
  MultiPoly derivative(std::size_t var) const;
  // Multiply by x^e.
  MultiPoly shifted(const Exponent& e) const;

  Rational evaluate(std::span<const Rational> point) const;
  // Replace variable `var` by `value` (a polynomial in the same variables).
  MultiPoly substitute(std::size_t var, const MultiPoly& value) const;

  // Re-expresses the polynomial over `vars`, which must contain every variable
  // that occurs with nonzero exponent.  Throws std::invalid_argument otherwise.
  MultiPoly with_variables(const std::vector<std::string>& vars) const;

  // Exact division test: returns true and sets *quotient iff this = d * q.
  bool divides_into(const MultiPoly& d, MultiPoly* quotient) const;

  // Scales to the primitive integer form with positive leading coefficient.
  MultiPoly primitive() const;

  std::string to_string() const;

 private:
  void require_same_vars(const MultiPoly& o) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

// Union of two variable lists, sorted by name.
std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);

}  // namespace mbfun
