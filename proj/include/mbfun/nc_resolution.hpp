#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mbfun/rational.hpp"

namespace mbfun {

// Exponents of F o pi and G o pi and of K_{Y/X} along the coordinate
// divisors of one chart of a normal-crossing resolution.
struct NCChart {
  std::string label;
  std::vector<std::int64_t> a, b, kappa;

  std::size_t dimension() const { return a.size(); }
  // Throws std::invalid_argument on mismatched lengths, negative entries or
  // a = b = 0.
  void validate() const;
  friend bool operator==(const NCChart&, const NCChart&) = default;
};

using RationalSet = std::set<Rational>;

// { r - l : r in residues, l >= 0 integer }
struct BoundSet {
  RationalSet residues;
};

// K_q = union over i with a_i > b_i of { m b_i/(a_i - b_i) - k/(a_i - b_i) : 1 <= k <= a_i - b_i }.
RationalSet roots_nc(const NCChart& chart, std::int64_t m);

BoundSet bound_set(const std::vector<NCChart>& charts, std::int64_t m);

bool member(const BoundSet& B, const Rational& r);

// Fractional parts in [0, 1) of the roots.
RationalSet eigenvalue_classes(const std::vector<Rational>& roots);

// Smallest l <= l_cap with small subset of union_{i=0..l} (big - i).
std::optional<std::int64_t> check_lemma4(const std::vector<Rational>& roots_small_m,
                                         const std::vector<Rational>& roots_big_m, std::int64_t l_cap);

// {"charts":[{"label":..., "a":[...], "b":[...], "kappa":[...]}]}
std::vector<NCChart> parse_charts(const std::string& json_text);
std::string charts_to_json(const std::vector<NCChart>& charts);

// Coordinate names for an n-dimensional chart: x, y, z for n <= 3, else x1..xn.
std::vector<std::string> chart_coordinates(std::size_t n);

}  // namespace mbfun
