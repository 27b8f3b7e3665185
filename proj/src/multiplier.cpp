#include "mbfun/multiplier.hpp"

#include <algorithm>
#include <stdexcept>

namespace mbfun {

namespace {

bool dominates(const Exponent& u, const Exponent& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (u[i] < g[i]) return false;
  }
  return true;
}

std::uint32_t to_u32(const Integer& v) {
  if (v < 0 || v > Integer(static_cast<unsigned long>(UINT32_MAX))) {
    throw std::overflow_error("multiplier threshold out of range");
  }
  return static_cast<std::uint32_t>(v.get_ui());
}

// Threshold exponents at alpha, or just below alpha when `below` is set.
Exponent thresholds(const NCChart& chart, const Rational& alpha, bool below) {
  Exponent u(chart.dimension(), 0);
  for (std::size_t i = 0; i < chart.dimension(); ++i) {
    const std::int64_t c = chart.a[i] - chart.b[i];
    if (c <= 0) continue;
    const Rational x = alpha * Rational(static_cast<long>(c));
    // floor((alpha - eps) c) = ceil(alpha c) - 1
    u[i] = to_u32(below ? Integer(-floor(-x)) - 1 : floor(x));
  }
  return u;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<Exponent> generators) : n_(n) {
  for (const auto& g : generators) {
    if (g.size() != n) throw std::invalid_argument("generator length mismatch");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (const auto& g : generators) {
    const bool redundant = std::any_of(generators.begin(), generators.end(),
                                       [&](const Exponent& h) { return h != g && dominates(g, h); });
    if (!redundant) gens_.push_back(g);
  }
}

MonomialIdeal MonomialIdeal::unit(std::size_t n) { return MonomialIdeal(n, {Exponent(n, 0)}); }

bool MonomialIdeal::contains(const Exponent& u) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Exponent& g) { return dominates(u, g); });
}

bool MonomialIdeal::contains(const MonomialIdeal& o) const {
  return std::all_of(o.gens_.begin(), o.gens_.end(), [&](const Exponent& g) { return contains(g); });
}

bool MonomialIdeal::is_unit() const { return contains(Exponent(n_, 0)); }

std::string MonomialIdeal::to_string(const std::vector<std::string>& coords) const {
  if (gens_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (k) out += ", ";
    std::string mono;
    for (std::size_t i = 0; i < n_; ++i) {
      if (gens_[k][i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += coords.at(i);
      if (gens_[k][i] > 1) mono += "^" + std::to_string(gens_[k][i]);
    }
    out += mono.empty() ? "1" : mono;
  }
  return out + ")";
}

MonomialIdeal multiplier_ideal_nc(const NCChart& chart, const Rational& alpha) {
  chart.validate();
  if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
  return MonomialIdeal(chart.dimension(), {thresholds(chart, alpha, false)});
}

Rational default_jump_upper(const NCChart& chart) {
  std::int64_t cmax = 0;
  for (std::size_t i = 0; i < chart.dimension(); ++i) cmax = std::max(cmax, chart.a[i] - chart.b[i]);
  return Rational(static_cast<long>(chart.dimension() + cmax));
}

JumpReport jumping_numbers_nc(const NCChart& chart, const Rational& upper) {
  chart.validate();
  if (upper <= 0) throw std::invalid_argument("upper bound must be positive");
  RationalSet candidates;
  for (std::size_t i = 0; i < chart.dimension(); ++i) {
    const std::int64_t c = chart.a[i] - chart.b[i];
    if (c <= 0) continue;
    for (std::int64_t k = 1;; ++k) {
      Rational q(Integer(static_cast<long>(k)), Integer(static_cast<long>(c)));
      q.canonicalize();
      if (q > upper) break;
      candidates.insert(q);
    }
  }
  JumpReport r;
  r.upper = upper;
  for (const auto& alpha : candidates) {
    const MonomialIdeal at(chart.dimension(), {thresholds(chart, alpha, false)});
    const MonomialIdeal before(chart.dimension(), {thresholds(chart, alpha, true)});
    if (!before.contains(at) || at.contains(before)) continue;
    r.jumps.push_back(alpha);
    r.ideals.push_back(at);
  }
  if (!r.jumps.empty()) r.lct = r.jumps.front();
  return r;
}

bool check_cor_jump(const JumpReport& report, const BFunction& b0) {
  if (!b0.splits() || report.jumps.empty()) return false;
  const auto roots = b0.root_set();
  for (const auto& j : report.jumps) {
    const bool ok = std::any_of(roots.begin(), roots.end(), [&](const Rational& r) {
      const Rational d = j + r;
      return is_integer(d) && d >= 0;
    });
    if (!ok) return false;
  }
  return report.lct && *report.lct == -roots.back();
}

bool is_in_multiplier_ideal(const MultiPoly& h, const Rational& alpha, const NCChart& chart,
                            const std::vector<std::string>& coords) {
  const auto names = coords.empty() ? chart_coordinates(chart.dimension()) : coords;
  if (names.size() != chart.dimension()) throw std::invalid_argument("coordinate count mismatch");
  for (const auto& v : h.variables()) {
    if (std::find(names.begin(), names.end(), v) == names.end()) {
      throw std::invalid_argument("variable " + v + " is not a chart coordinate");
    }
  }
  const auto I = multiplier_ideal_nc(chart, alpha);
  const auto p = h.with_variables(names);
  return std::all_of(p.terms().begin(), p.terms().end(), [&](const auto& t) { return I.contains(t.first); });
}

}  // namespace mbfun
