#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mbfun/multipoly.hpp"
#include "mbfun/nc_resolution.hpp"
#include "mbfun/rational.hpp"
#include "mbfun/unipoly.hpp"

namespace mbfun {

// Monomial ideal given by a minimal antichain of exponent vectors.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::size_t n, std::vector<Exponent> generators);
  static MonomialIdeal unit(std::size_t n);

  const std::vector<Exponent>& generators() const { return gens_; }
  std::size_t dimension() const { return n_; }
  bool contains(const Exponent& u) const;
  bool contains(const MonomialIdeal& o) const;
  bool is_unit() const;
  // "(x^2, y)", "(1)"
  std::string to_string(const std::vector<std::string>& coords) const;
  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Exponent> gens_;
};

// I(f)_alpha for f = y^a / y^b in normal-crossing coordinates:
// generated by y^u with u_i = floor(alpha c_i) where c_i = a_i - b_i > 0,
// which is the strict threshold u_i > alpha c_i - 1.
MonomialIdeal multiplier_ideal_nc(const NCChart& chart, const Rational& alpha);

struct JumpReport {
  std::vector<Rational> jumps;
  // ideals[k] is the ideal on [jumps[k], jumps[k+1]); the ideal below the
  // first jump is the unit ideal.
  std::vector<MonomialIdeal> ideals;
  std::optional<Rational> lct;
  Rational upper;
};

// n + max_i c_i.
Rational default_jump_upper(const NCChart& chart);

// Jumping numbers in (0, upper]; candidates k/c_i confirmed by comparing the
// ideal at alpha with the ideal just below alpha.
JumpReport jumping_numbers_nc(const NCChart& chart, const Rational& upper);

// Every jump equals -r + i for a root r of b0 and an integer i >= 0, and
// lct = -max root.  False when b0 does not split.
bool check_cor_jump(const JumpReport& report, const BFunction& b0);

// Every monomial of h lies in multiplier_ideal_nc(chart, alpha); h's variables
// are matched by name to `coords` (default chart_coordinates).
bool is_in_multiplier_ideal(const MultiPoly& h, const Rational& alpha, const NCChart& chart,
                            const std::vector<std::string>& coords = {});

}  // namespace mbfun
