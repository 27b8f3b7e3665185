#include "mbfun/multipoly.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mbfun/error.hpp"

namespace mbfun {

bool DegRevLexLess::operator()(const Exponent& a, const Exponent& b) const {
  std::uint64_t da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

std::uint32_t checked_add(std::uint32_t a, std::uint32_t b) {
  if (a > std::numeric_limits<std::uint32_t>::max() - b) {
    throw CapabilityError("monomial exponent overflow");
  }
  return a + b;
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rational& c) {
  MultiPoly p(std::move(variables));
  p.add_term(Exponent(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, std::size_t index) {
  MultiPoly p(std::move(variables));
  if (index >= p.vars_.size()) throw std::out_of_range("variable index");
  Exponent e(p.vars_.size(), 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, const std::string& name) {
  auto it = std::find(variables.begin(), variables.end(), name);
  if (it == variables.end()) throw std::invalid_argument("unknown variable " + name);
  const auto idx = static_cast<std::size_t>(it - variables.begin());
  return variable(std::move(variables), idx);
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != vars_.size()) throw std::invalid_argument("exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                      [](auto v) { return v == 0; }));
}

Rational MultiPoly::constant_term() const { return coefficient(Exponent(vars_.size(), 0)); }

Rational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t MultiPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) {
    d = std::max(d, std::accumulate(e.begin(), e.end(), std::uint32_t{0}));
  }
  return d;
}

std::uint32_t MultiPoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

const std::pair<const Exponent, Rational>& MultiPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return *terms_.rbegin();
}

void MultiPoly::require_same_vars(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("polynomials over different variables");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  require_same_vars(o);
  MultiPoly r(vars_);
  Exponent e(vars_.size());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(ea[i], eb[i]);
      r.add_term(e, ca * cb);
    }
  }
  *this = std::move(r);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(vars_, Rational(1));
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e.at(var) == 0) continue;
    Exponent ne = e;
    --ne[var];
    r.add_term(ne, c * e[var]);
  }
  return r;
}

MultiPoly MultiPoly::shifted(const Exponent& s) const {
  MultiPoly r(vars_);
  Exponent ne(vars_.size());
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) ne[i] = checked_add(e[i], s.at(i));
    r.terms_.emplace(ne, c);
  }
  return r;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_.size()) throw std::invalid_argument("evaluation point size");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
    }
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const {
  require_same_vars(value);
  MultiPoly r(vars_);
  std::vector<MultiPoly> powers{constant(vars_, Rational(1))};
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[var]) powers.push_back(powers.back() * value);
    Exponent rest = e;
    rest[var] = 0;
    MultiPoly t = powers[e[var]].shifted(rest);
    t *= c;
    r += t;
  }
  return r;
}

MultiPoly MultiPoly::with_variables(const std::vector<std::string>& vars) const {
  std::vector<std::size_t> map(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    if (it == vars.end()) {
      if (degree_in(i) != 0) {
        throw std::invalid_argument("variable " + vars_[i] + " missing from target list");
      }
      map[i] = vars.size();
    } else {
      map[i] = static_cast<std::size_t>(it - vars.begin());
    }
  }
  MultiPoly r(vars);
  for (const auto& [e, c] : terms_) {
    Exponent ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (map[i] < vars.size()) ne[map[i]] = e[i];
    }
    r.add_term(ne, c);
  }
  return r;
}

bool MultiPoly::divides_into(const MultiPoly& d, MultiPoly* quotient) const {
  require_same_vars(d);
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  MultiPoly rem = *this;
  MultiPoly q(vars_);
  const auto& [dl, dc] = d.leading_term();
  while (!rem.is_zero()) {
    const auto [rl, rc] = rem.leading_term();
    Exponent diff(rl.size());
    for (std::size_t i = 0; i < rl.size(); ++i) {
      if (rl[i] < dl[i]) return false;
      diff[i] = rl[i] - dl[i];
    }
    const Rational f = rc / dc;
    q.add_term(diff, f);
    MultiPoly t = d.shifted(diff);
    t *= f;
    rem -= t;
  }
  if (quotient != nullptr) *quotient = std::move(q);
  return true;
}

MultiPoly MultiPoly::primitive() const {
  if (is_zero()) return *this;
  Integer den = 1, num = 0;
  for (const auto& [e, c] : terms_) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  for (const auto& [e, c] : terms_) {
    Integer v = c.get_num() * (den / c.get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (leading_term().second < 0) scale = -scale;
  MultiPoly r = *this;
  r *= scale;
  return r;
}

namespace {

std::string monomial_string(const std::vector<std::string>& vars, const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const std::string mono = monomial_string(vars_, e);
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << mono;
    } else {
      os << mag.get_str() << "*" << mono;
    }
  }
  return os.str();
}

std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
  std::vector<std::string> r = a;
  r.insert(r.end(), b.begin(), b.end());
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

}  // namespace mbfun
