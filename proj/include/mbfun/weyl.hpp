#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mbfun/multipoly.hpp"
#include "mbfun/rational.hpp"

namespace mbfun {

inline constexpr std::size_t kMaxGenerators = 16;
using Monomial = std::array<std::uint16_t, kMaxGenerators>;

enum class GenKind {
  Coordinate,   // x_i; commutes with everything except its derivation
  Derivation,   // d_i with [d_i, x_i] = 1 (or h^2 when homogenized)
  Central,      // commutes with everything
  Homogenizer,  // h, central; present only in homogenized signatures
  Shift,        // s of the twisted algebra
  Shifted,      // t of the twisted algebra, t s = (s + 1) t
};

struct Generator {
  std::string name;
  GenKind kind;
  int partner = -1;  // derivation <-> coordinate, s <-> t
};

class Signature;
using SignaturePtr = std::shared_ptr<const Signature>;

// Generator table of a PBW algebra.  Generators are stored coordinates first,
// then derivations (same order), then central variables, then h.  In the
// twisted algebra the order is s, t and normal-ordered monomials read s^i t^j.
class Signature {
 public:
  // Weyl algebra on `coords` with derivations named "d" + coordinate name.
  static SignaturePtr weyl(const std::vector<std::string>& coords,
                           const std::vector<std::string>& central = {},
                           bool homogenized = false);
  // Polynomial ring: every variable is central.
  static SignaturePtr commutative(const std::vector<std::string>& vars);
  static SignaturePtr twisted(const std::string& s = "s", const std::string& t = "t");

  std::size_t size() const { return gens_.size(); }
  const Generator& generator(std::size_t i) const { return gens_.at(i); }
  const std::vector<Generator>& generators() const { return gens_; }
  std::optional<std::size_t> find(const std::string& name) const;
  // Throws std::invalid_argument for unknown names.
  std::size_t index(const std::string& name) const;

  bool homogenized() const { return homogenizer_ >= 0; }
  int homogenizer() const { return homogenizer_; }
  bool is_commutative() const;
  bool is_twisted() const;

  std::vector<std::string> coordinate_names() const;
  std::vector<std::string> central_names() const;

  // Same algebra with a homogenizing variable "h" appended.
  SignaturePtr homogenization() const;
  SignaturePtr dehomogenization() const;
  // Subalgebra on the named generators.  Coordinates must keep their
  // derivations and vice versa.
  SignaturePtr restricted(const std::vector<std::string>& keep) const;

  friend bool operator==(const Signature& a, const Signature& b);

 private:
  std::vector<Generator> gens_;
  int homogenizer_ = -1;

  static SignaturePtr build(std::vector<Generator> gens);
};

bool same_signature(const SignaturePtr& a, const SignaturePtr& b);

std::uint16_t checked_add16(std::uint32_t a, std::uint32_t b);

// Normal-ordered expansion of the product of two monomials.  Coefficients are
// integers for every supported relation table.
std::vector<std::pair<Monomial, Integer>> multiply_monomials(const Signature& sig,
                                                             const Monomial& a,
                                                             const Monomial& b);

// Element of a PBW algebra, stored as normal-ordered monomials.
class WeylElement {
 public:
  using TermMap = std::map<Monomial, Rational>;

  WeylElement() = default;
  explicit WeylElement(SignaturePtr sig);

  static WeylElement constant(SignaturePtr sig, const Rational& c);
  static WeylElement generator(SignaturePtr sig, const std::string& name);
  static WeylElement monomial(SignaturePtr sig, const Monomial& m, const Rational& c = 1);
  // Embeds a polynomial whose variables are coordinates or central generators.
  static WeylElement from_poly(SignaturePtr sig, const MultiPoly& p);

  const SignaturePtr& signature() const { return sig_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Monomial& m, const Rational& c);

  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::size_t gen) const;
  // True when no term involves a generator outside `gens`.
  bool supported_on(const std::vector<std::size_t>& gens) const;

  WeylElement operator-() const;
  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  WeylElement& operator*=(const Rational& c);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(WeylElement a, const Rational& c) { return a *= c; }
  friend WeylElement operator*(const Rational& c, WeylElement a) { return a *= c; }
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement& a, const WeylElement& b);

  WeylElement pow(unsigned k) const;

  // Polynomial in the generators; requires an element without derivations.
  MultiPoly to_poly() const;
  // Same element over another signature, matching generators by name.
  WeylElement remap(SignaturePtr target) const;
  // Sets h = 1 (homogenized signatures only).
  WeylElement dehomogenize() const;

  std::string to_string() const;

 private:
  void require_same(const WeylElement& o) const;

  SignaturePtr sig_;
  TermMap terms_;
};

WeylElement normal_order(const WeylElement& a, const WeylElement& b);
WeylElement commutator(const WeylElement& a, const WeylElement& b);

// Image of an element of the twisted algebra C[s,t] in D[t,dt] under
// s -> -dt*t.  `target` must be a Weyl signature with coordinate `t_name`.
WeylElement twisted_image(const WeylElement& e, SignaturePtr target, const std::string& t_name);

}  // namespace mbfun
