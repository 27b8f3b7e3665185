#include "mbfun/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mbfun {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(std::size_t degree, const Rational& c) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const Rational& r) { return UniPoly({-r, Rational(1)}); }

UniPoly UniPoly::from_multipoly(const MultiPoly& p) {
  std::optional<std::size_t> var;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (var && *var != i) throw std::invalid_argument("polynomial is not univariate");
      var = i;
    }
  }
  std::vector<Rational> v;
  for (const auto& [e, c] : p.terms()) {
    const std::size_t d = var ? e[*var] : 0;
    if (v.size() <= d) v.resize(d + 1, Rational(0));
    v[d] += c;
  }
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::leading_coefficient() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational UniPoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

Rational UniPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

UniPoly UniPoly::compose_linear(const Rational& a, const Rational& b) const {
  const UniPoly lin({b, a});
  UniPoly acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc *= lin;
    acc += constant(coeffs_[i]);
  }
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly r = *this;
  const Rational lc = leading_coefficient();
  for (auto& c : r.coeffs_) c /= lc;
  return r;
}

UniPoly UniPoly::pow(unsigned k) const {
  UniPoly r = constant(1);
  for (unsigned i = 0; i < k; ++i) r *= *this;
  return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  std::vector<Rational> rem = coeffs_;
  const int dd = d.degree();
  if (degree() < dd) return {UniPoly(), *this};
  std::vector<Rational> q(static_cast<std::size_t>(degree() - dd + 1), Rational(0));
  const Rational lc = d.leading_coefficient();
  for (int i = degree(); i >= dd; --i) {
    const Rational f = rem[static_cast<std::size_t>(i)] / lc;
    q[static_cast<std::size_t>(i - dd)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(i - dd + j)] -= f * d.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
}

MultiPoly UniPoly::to_multipoly(const std::string& var) const {
  MultiPoly p({var});
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    p.add_term({static_cast<std::uint32_t>(i)}, coeffs_[i]);
  }
  return p;
}

std::string UniPoly::to_string(const std::string& var) const {
  return to_multipoly(var).to_string();
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

// Positive divisors of |n| (n != 0) by trial division.
std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Integer coefficients with content removed.
std::vector<Integer> primitive_integer_form(const UniPoly& p) {
  Integer den = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Integer> v;
  Integer g = 0;
  for (const auto& c : p.coefficients()) {
    v.push_back(c.get_num() * (den / c.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.back().get_mpz_t());
  }
  for (auto& x : v) x /= g;
  return v;
}

}  // namespace

RationalFactorization rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots of zero polynomial");
  RationalFactorization out;
  UniPoly rem = p;
  int zero_mult = 0;
  while (rem.degree() > 0 && rem.coefficient(0) == 0) {
    rem = rem.divmod(UniPoly::monomial(1)).first;
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.push_back({Rational(0), zero_mult});
  if (rem.degree() > 0) {
    const auto ints = primitive_integer_form(rem);
    const auto ps = divisors(ints.front());
    const auto qs = divisors(ints.back());
    std::vector<Rational> candidates;
    for (const auto& a : ps) {
      for (const auto& b : qs) {
        Rational r(a, b);
        r.canonicalize();
        candidates.push_back(r);
        candidates.push_back(-r);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      int mult = 0;
      while (rem.degree() > 0 && rem.evaluate(r) == 0) {
        rem = rem.divmod(UniPoly::linear_root(r)).first;
        ++mult;
      }
      if (mult > 0) out.roots.push_back({r, mult});
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.root < b.root; });
  out.remainder = std::move(rem);
  return out;
}

bool poly_divides(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero()) throw std::invalid_argument("poly_divides: zero divisor");
  return b.divmod(a).second.is_zero();
}

UniPoly expand_roots(const std::vector<RootMultiplicity>& roots) {
  UniPoly r = UniPoly::constant(1);
  for (const auto& rm : roots) r *= UniPoly::linear_root(rm.root).pow(static_cast<unsigned>(rm.multiplicity));
  return r;
}

BFunction BFunction::from_poly(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("b-function must be nonzero");
  BFunction b;
  b.poly_ = p.monic();
  auto fact = rational_roots(b.poly_);
  if (fact.remainder.degree() == 0) b.roots_ = std::move(fact.roots);
  return b;
}

BFunction BFunction::from_roots(const std::vector<RootMultiplicity>& roots) {
  return from_poly(expand_roots(roots));
}

std::vector<Rational> BFunction::root_set() const {
  std::vector<Rational> r;
  if (roots_) {
    for (const auto& rm : *roots_) r.push_back(rm.root);
  }
  return r;
}

std::vector<Rational> BFunction::root_multiset() const {
  std::vector<Rational> r;
  if (roots_) {
    for (const auto& rm : *roots_) {
      for (int i = 0; i < rm.multiplicity; ++i) r.push_back(rm.root);
    }
  }
  return r;
}

std::string BFunction::to_string() const {
  if (!roots_) return poly_.to_string();
  if (roots_->empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto it = roots_->rbegin(); it != roots_->rend(); ++it) {
    if (!first) os << "*";
    first = false;
    const Rational c = -it->root;
    os << "(s";
    if (c > 0) os << "+" << c.get_str();
    if (c < 0) os << "-" << Rational(-c).get_str();
    os << ")";
    if (it->multiplicity > 1) os << "^" << it->multiplicity;
  }
  return os.str();
}

}  // namespace mbfun
