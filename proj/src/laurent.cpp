#include "mbfun/laurent.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace mbfun {

LaurentContext::LaurentContext(const MultiPoly& F, const MultiPoly& G) {
  coords_ = merge_variables(F.variables(), G.variables());
  if (std::find(coords_.begin(), coords_.end(), "s") != coords_.end()) {
    throw std::invalid_argument("variable name s is reserved for the b-function parameter");
  }
  vars_ = coords_;
  vars_.push_back("s");
  F_ = F.with_variables(vars_);
  G_ = G.with_variables(vars_);
  if (F_.is_zero() || G_.is_zero()) throw std::invalid_argument("F and G must be nonzero");
  s_ = MultiPoly::variable(vars_, "s");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    dF_.push_back(F_.derivative(i));
    dG_.push_back(G_.derivative(i));
  }
  Fp_.push_back(MultiPoly::constant(vars_, 1));
  Gp_.push_back(MultiPoly::constant(vars_, 1));
  ops_ = Signature::weyl(coords_, {"s"});
}

const MultiPoly& LaurentContext::F_pow(unsigned k) const {
  while (Fp_.size() <= k) Fp_.push_back(Fp_.back() * F_);
  return Fp_[k];
}

const MultiPoly& LaurentContext::G_pow(unsigned k) const {
  while (Gp_.size() <= k) Gp_.push_back(Gp_.back() * G_);
  return Gp_[k];
}

LaurentSection make_section(const LaurentContext& ctx, const MultiPoly& numerator, int fpow,
                            int gpow, unsigned shift) {
  return {numerator.with_variables(ctx.variables()), fpow, gpow, shift};
}

LaurentSection renormalize(const LaurentSection& v) {
  const int k = static_cast<int>(v.shift);
  return {v.numerator, v.fpow - k, v.gpow + k, 0};
}

std::vector<LaurentSection> common_form(const LaurentContext& ctx, std::vector<LaurentSection> vs) {
  if (vs.empty()) return vs;
  int A = INT32_MIN, B = INT32_MIN;
  for (auto& v : vs) {
    v = renormalize(v);
    A = std::max(A, v.fpow);
    B = std::max(B, v.gpow);
  }
  for (auto& v : vs) {
    if (v.fpow < A) v.numerator *= ctx.F_pow(static_cast<unsigned>(A - v.fpow));
    if (v.gpow < B) v.numerator *= ctx.G_pow(static_cast<unsigned>(B - v.gpow));
    v.fpow = A;
    v.gpow = B;
  }
  return vs;
}

LaurentSection add_sections(const LaurentContext& ctx, const LaurentSection& a,
                            const LaurentSection& b) {
  if (section_is_zero(a)) return b;
  if (section_is_zero(b)) return a;
  auto c = common_form(ctx, {a, b});
  c[0].numerator += c[1].numerator;
  return c[0];
}

bool section_is_zero(const LaurentSection& v) { return v.numerator.is_zero(); }

bool sections_equal(const LaurentContext& ctx, const LaurentSection& a, const LaurentSection& b) {
  if (section_is_zero(a) || section_is_zero(b)) return section_is_zero(a) && section_is_zero(b);
  auto c = common_form(ctx, {a, b});
  return c[0].numerator == c[1].numerator;
}

LaurentSection apply_derivation(const LaurentContext& ctx, std::size_t i, const LaurentSection& v) {
  if (section_is_zero(v)) return v;
  const auto& h = v.numerator;
  const auto n = ctx.variables();
  const MultiPoly sk = ctx.s() + MultiPoly::constant(n, Rational(static_cast<int>(v.shift)));
  // (d_i h) F G + h (s + k - fpow) F_i G - h (gpow + s + k) F G_i
  MultiPoly num = h.derivative(i) * ctx.F() * ctx.G();
  num += h * (sk - MultiPoly::constant(n, v.fpow)) * ctx.dF(i) * ctx.G();
  num -= h * (sk + MultiPoly::constant(n, v.gpow)) * ctx.F() * ctx.dG(i);
  return {std::move(num), v.fpow + 1, v.gpow + 1, v.shift};
}

std::vector<Exponent> exponents_up_to(std::size_t n, unsigned degree) {
  std::vector<Exponent> out;
  Exponent cur(n, 0);
  for (unsigned d = 0; d <= degree; ++d) {
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
      if (i + 1 == n) {
        cur[i] = left;
        out.push_back(cur);
        return;
      }
      for (unsigned k = left + 1; k-- > 0;) {
        cur[i] = k;
        rec(i + 1, left - k);
      }
    };
    if (n == 0) {
      out.push_back(cur);
      break;
    }
    rec(0, d);
  }
  return out;
}

DerivativeTable::DerivativeTable(const LaurentContext& ctx, LaurentSection v, unsigned degree) {
  const std::size_t n = ctx.coordinates().size();
  order_ = exponents_up_to(n, degree);
  for (const auto& beta : order_) {
    auto it = std::find_if(beta.begin(), beta.end(), [](auto e) { return e > 0; });
    if (it == beta.end()) {
      table_.emplace(beta, v);
      continue;
    }
    const auto i = static_cast<std::size_t>(it - beta.begin());
    Exponent prev = beta;
    --prev[i];
    table_.emplace(beta, apply_derivation(ctx, i, table_.at(prev)));
  }
}

const LaurentSection& DerivativeTable::get(const Exponent& beta) const { return table_.at(beta); }

LaurentSection apply_operator(const LaurentContext& ctx, const WeylElement& P,
                              const LaurentSection& v) {
  const auto& sig = *ctx.operator_algebra();
  if (!same_signature(P.signature(), ctx.operator_algebra())) {
    throw std::invalid_argument("operator algebra mismatch");
  }
  const std::size_t n = ctx.coordinates().size();
  const std::size_t s_gen = sig.index("s");
  std::map<Exponent, LaurentSection> cache;
  std::function<const LaurentSection&(const Exponent&)> deriv = [&](const Exponent& beta) -> const LaurentSection& {
    auto it = cache.find(beta);
    if (it != cache.end()) return it->second;
    auto nz = std::find_if(beta.begin(), beta.end(), [](auto e) { return e > 0; });
    if (nz == beta.end()) return cache.emplace(beta, v).first->second;
    const auto i = static_cast<std::size_t>(nz - beta.begin());
    Exponent prev = beta;
    --prev[i];
    LaurentSection d = apply_derivation(ctx, i, deriv(prev));
    return cache.emplace(beta, std::move(d)).first->second;
  };
  LaurentSection total{MultiPoly(ctx.variables()), 0, 0, 0};
  for (const auto& [m, c] : P.terms()) {
    Exponent beta(n), shift(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
      beta[i] = m[n + i];
      shift[i] = m[i];
    }
    shift[n] = m[s_gen];
    LaurentSection t = deriv(beta);
    t.numerator = t.numerator.shifted(shift) * c;
    total = add_sections(ctx, total, t);
  }
  return total;
}

}  // namespace mbfun
