#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "mbfun/rational.hpp"

namespace mbfun {

using SparseRow = std::map<std::size_t, Rational>;

// A x = b over Q with sparse rows.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t unknowns = 0) : unknowns_(unknowns) {}

  std::size_t unknowns() const { return unknowns_; }
  std::size_t equations() const { return rows_.size(); }
  void add_equation(SparseRow row, const Rational& rhs);

  // A solution with every free variable set to zero, or nullopt when
  // inconsistent.  Connected components of the incidence graph that do not
  // touch a nonzero right-hand side are skipped (their unknowns stay zero).
  std::optional<std::vector<Rational>> solve() const;

  // Basis of the solutions of A x = 0 (right-hand sides ignored).
  std::vector<std::vector<Rational>> nullspace() const;

 private:
  std::vector<std::vector<std::size_t>> components(bool only_inhomogeneous) const;

  std::size_t unknowns_;
  std::vector<SparseRow> rows_;
  std::vector<Rational> rhs_;
};

}  // namespace mbfun
