#include "mbfun/weyl.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mbfun/error.hpp"

namespace mbfun {

std::uint16_t checked_add16(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t s = a + b;
  if (s > std::numeric_limits<std::uint16_t>::max()) {
    throw CapabilityError("operator exponent overflow");
  }
  return static_cast<std::uint16_t>(s);
}

SignaturePtr Signature::build(std::vector<Generator> gens) {
  if (gens.size() > kMaxGenerators) {
    throw CapabilityError("algebra needs " + std::to_string(gens.size()) +
                          " generators; at most " + std::to_string(kMaxGenerators) +
                          " are supported");
  }
  std::set<std::string> names;
  for (const auto& g : gens) {
    if (!names.insert(g.name).second) {
      throw std::invalid_argument("duplicate generator name " + g.name);
    }
  }
  auto sig = std::make_shared<Signature>();
  sig->gens_ = std::move(gens);
  for (std::size_t i = 0; i < sig->gens_.size(); ++i) {
    if (sig->gens_[i].kind == GenKind::Homogenizer) sig->homogenizer_ = static_cast<int>(i);
  }
  return sig;
}

SignaturePtr Signature::weyl(const std::vector<std::string>& coords,
                             const std::vector<std::string>& central, bool homogenized) {
  std::vector<Generator> gens;
  const int n = static_cast<int>(coords.size());
  for (int i = 0; i < n; ++i) gens.push_back({coords[i], GenKind::Coordinate, n + i});
  for (int i = 0; i < n; ++i) gens.push_back({"d" + coords[i], GenKind::Derivation, i});
  for (const auto& c : central) gens.push_back({c, GenKind::Central, -1});
  if (homogenized) gens.push_back({"h_", GenKind::Homogenizer, -1});
  return build(std::move(gens));
}

SignaturePtr Signature::commutative(const std::vector<std::string>& vars) {
  std::vector<Generator> gens;
  for (const auto& v : vars) gens.push_back({v, GenKind::Central, -1});
  return build(std::move(gens));
}

SignaturePtr Signature::twisted(const std::string& s, const std::string& t) {
  return build({{s, GenKind::Shift, 1}, {t, GenKind::Shifted, 0}});
}

std::optional<std::size_t> Signature::find(const std::string& name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t Signature::index(const std::string& name) const {
  auto i = find(name);
  if (!i) throw std::invalid_argument("unknown generator " + name);
  return *i;
}

bool Signature::is_commutative() const {
  return std::none_of(gens_.begin(), gens_.end(), [](const Generator& g) {
    return g.kind == GenKind::Derivation || g.kind == GenKind::Shift ||
           g.kind == GenKind::Shifted;
  });
}

bool Signature::is_twisted() const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [](const Generator& g) { return g.kind == GenKind::Shift; });
}

std::vector<std::string> Signature::coordinate_names() const {
  std::vector<std::string> r;
  for (const auto& g : gens_) {
    if (g.kind == GenKind::Coordinate) r.push_back(g.name);
  }
  return r;
}

std::vector<std::string> Signature::central_names() const {
  std::vector<std::string> r;
  for (const auto& g : gens_) {
    if (g.kind == GenKind::Central) r.push_back(g.name);
  }
  return r;
}

SignaturePtr Signature::homogenization() const {
  if (homogenized()) throw std::logic_error("signature already homogenized");
  if (is_twisted()) throw std::invalid_argument("twisted algebra cannot be homogenized");
  auto gens = gens_;
  gens.push_back({"h_", GenKind::Homogenizer, -1});
  return build(std::move(gens));
}

SignaturePtr Signature::dehomogenization() const {
  if (!homogenized()) return build(gens_);
  auto gens = gens_;
  gens.erase(gens.begin() + homogenizer_);
  return build(std::move(gens));
}

SignaturePtr Signature::restricted(const std::vector<std::string>& keep) const {
  std::vector<Generator> gens;
  for (const auto& g : gens_) {
    if (std::find(keep.begin(), keep.end(), g.name) == keep.end()) continue;
    if (g.partner >= 0) {
      const auto& p = gens_[static_cast<std::size_t>(g.partner)].name;
      if (std::find(keep.begin(), keep.end(), p) == keep.end()) {
        throw std::invalid_argument("generator " + g.name + " kept without its partner " + p);
      }
    }
    gens.push_back(g);
  }
  for (auto& g : gens) {
    if (g.partner < 0) continue;
    const auto& p = gens_[static_cast<std::size_t>(g.partner)].name;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (gens[j].name == p) g.partner = static_cast<int>(j);
    }
  }
  return build(std::move(gens));
}

bool operator==(const Signature& a, const Signature& b) {
  if (a.gens_.size() != b.gens_.size()) return false;
  for (std::size_t i = 0; i < a.gens_.size(); ++i) {
    const auto& x = a.gens_[i];
    const auto& y = b.gens_[i];
    if (x.name != y.name || x.kind != y.kind || x.partner != y.partner) return false;
  }
  return true;
}

bool same_signature(const SignaturePtr& a, const SignaturePtr& b) {
  return a == b || (a && b && *a == *b);
}

std::vector<std::pair<Monomial, Integer>> multiply_monomials(const Signature& sig,
                                                             const Monomial& a,
                                                             const Monomial& b) {
  const std::size_t n = sig.size();
  Monomial base{};
  for (std::size_t i = 0; i < n; ++i) base[i] = checked_add16(a[i], b[i]);
  std::vector<std::pair<Monomial, Integer>> out{{base, Integer(1)}};
  const int h = sig.homogenizer();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& g = sig.generator(i);
    if (g.kind == GenKind::Derivation) {
      // d^beta x^gamma = sum_k k! C(beta,k) C(gamma,k) x^(gamma-k) d^(beta-k)
      const auto x = static_cast<std::size_t>(g.partner);
      const unsigned beta = a[i];
      const unsigned gamma = b[x];
      if (beta == 0 || gamma == 0) continue;
      std::vector<std::pair<Monomial, Integer>> next;
      for (const auto& [m, c] : out) {
        for (unsigned k = 0; k <= std::min(beta, gamma); ++k) {
          Integer coeff, t;
          mpz_fac_ui(coeff.get_mpz_t(), k);
          mpz_bin_uiui(t.get_mpz_t(), beta, k);
          coeff *= t;
          mpz_bin_uiui(t.get_mpz_t(), gamma, k);
          coeff *= t;
          Monomial mm = m;
          mm[i] = static_cast<std::uint16_t>(mm[i] - k);
          mm[x] = static_cast<std::uint16_t>(mm[x] - k);
          if (h >= 0) mm[static_cast<std::size_t>(h)] = checked_add16(mm[static_cast<std::size_t>(h)], 2 * k);
          next.emplace_back(mm, c * coeff);
        }
      }
      out = std::move(next);
    } else if (g.kind == GenKind::Shifted) {
      // t^p s^c = (s + p)^c t^p
      const auto s = static_cast<std::size_t>(g.partner);
      const unsigned p = a[i];
      const unsigned c = b[s];
      if (p == 0 || c == 0) continue;
      std::vector<std::pair<Monomial, Integer>> next;
      for (const auto& [m, cf] : out) {
        for (unsigned j = 0; j <= c; ++j) {
          Integer coeff, pw;
          mpz_bin_uiui(coeff.get_mpz_t(), c, j);
          mpz_ui_pow_ui(pw.get_mpz_t(), p, c - j);
          Monomial mm = m;
          mm[s] = static_cast<std::uint16_t>(mm[s] - (c - j));
          next.emplace_back(mm, cf * coeff * pw);
        }
      }
      out = std::move(next);
    }
  }
  return out;
}

WeylElement::WeylElement(SignaturePtr sig) : sig_(std::move(sig)) {}

WeylElement WeylElement::constant(SignaturePtr sig, const Rational& c) {
  WeylElement e(std::move(sig));
  e.add_term(Monomial{}, c);
  return e;
}

WeylElement WeylElement::generator(SignaturePtr sig, const std::string& name) {
  Monomial m{};
  m[sig->index(name)] = 1;
  return monomial(std::move(sig), m);
}

WeylElement WeylElement::monomial(SignaturePtr sig, const Monomial& m, const Rational& c) {
  WeylElement e(std::move(sig));
  e.add_term(m, c);
  return e;
}

WeylElement WeylElement::from_poly(SignaturePtr sig, const MultiPoly& p) {
  std::vector<std::size_t> map;
  for (const auto& v : p.variables()) {
    auto i = sig->find(v);
    if (!i) {
      map.push_back(kMaxGenerators);
      continue;
    }
    if (sig->generator(*i).kind == GenKind::Derivation) {
      throw std::invalid_argument("polynomial variable " + v + " is a derivation");
    }
    map.push_back(*i);
  }
  WeylElement e(std::move(sig));
  for (const auto& [exp, c] : p.terms()) {
    Monomial m{};
    for (std::size_t j = 0; j < exp.size(); ++j) {
      if (exp[j] == 0) continue;
      if (map[j] == kMaxGenerators) {
        throw std::invalid_argument("variable " + p.variables()[j] + " not in algebra");
      }
      m[map[j]] = checked_add16(m[map[j]], exp[j]);
    }
    e.add_term(m, c);
  }
  return e;
}

void WeylElement::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::uint32_t WeylElement::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) {
    std::uint32_t t = 0;
    for (auto e : m) t += e;
    d = std::max(d, t);
  }
  return d;
}

std::uint32_t WeylElement::degree_in(std::size_t gen) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max<std::uint32_t>(d, m[gen]);
  return d;
}

bool WeylElement::supported_on(const std::vector<std::size_t>& gens) const {
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < kMaxGenerators; ++i) {
      if (m[i] != 0 && std::find(gens.begin(), gens.end(), i) == gens.end()) return false;
    }
  }
  return true;
}

void WeylElement::require_same(const WeylElement& o) const {
  if (!same_signature(sig_, o.sig_)) throw std::invalid_argument("signature mismatch");
}

WeylElement WeylElement::operator-() const {
  WeylElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  if (!sig_) sig_ = o.sig_;
  require_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  if (!sig_) sig_ = o.sig_;
  require_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

WeylElement& WeylElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  a.require_same(b);
  WeylElement r(a.sig_);
  const bool comm = a.sig_->is_commutative();
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (comm) {
        Monomial m{};
        for (std::size_t i = 0; i < a.sig_->size(); ++i) m[i] = checked_add16(ma[i], mb[i]);
        r.add_term(m, ca * cb);
        continue;
      }
      for (const auto& [m, k] : multiply_monomials(*a.sig_, ma, mb)) {
        r.add_term(m, ca * cb * Rational(k));
      }
    }
  }
  return r;
}

bool operator==(const WeylElement& a, const WeylElement& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  return same_signature(a.sig_, b.sig_) && a.terms_ == b.terms_;
}

WeylElement WeylElement::pow(unsigned k) const {
  WeylElement r = constant(sig_, 1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

MultiPoly WeylElement::to_poly() const {
  std::vector<std::string> names;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < sig_->size(); ++i) {
    if (sig_->generator(i).kind == GenKind::Derivation) continue;
    names.push_back(sig_->generator(i).name);
    idx.push_back(i);
  }
  MultiPoly p(names);
  for (const auto& [m, c] : terms_) {
    Exponent e(names.size());
    for (std::size_t j = 0; j < idx.size(); ++j) e[j] = m[idx[j]];
    for (std::size_t i = 0; i < sig_->size(); ++i) {
      if (sig_->generator(i).kind == GenKind::Derivation && m[i] != 0) {
        throw std::invalid_argument("element involves derivations");
      }
    }
    p.add_term(e, c);
  }
  return p;
}

WeylElement WeylElement::remap(SignaturePtr target) const {
  std::vector<int> map(sig_->size(), -1);
  for (std::size_t i = 0; i < sig_->size(); ++i) {
    if (auto j = target->find(sig_->generator(i).name)) map[i] = static_cast<int>(*j);
  }
  WeylElement r(std::move(target));
  for (const auto& [m, c] : terms_) {
    Monomial nm{};
    for (std::size_t i = 0; i < sig_->size(); ++i) {
      if (m[i] == 0) continue;
      if (map[i] < 0) {
        throw std::invalid_argument("generator " + sig_->generator(i).name +
                                    " missing from target algebra");
      }
      nm[static_cast<std::size_t>(map[i])] = m[i];
    }
    r.add_term(nm, c);
  }
  return r;
}

WeylElement WeylElement::dehomogenize() const {
  if (!sig_->homogenized()) return *this;
  const auto h = static_cast<std::size_t>(sig_->homogenizer());
  WeylElement r(sig_->dehomogenization());
  for (const auto& [m, c] : terms_) {
    Monomial nm{};
    std::size_t j = 0;
    for (std::size_t i = 0; i < sig_->size(); ++i) {
      if (i == h) continue;
      nm[j++] = m[i];
    }
    r.add_term(nm, c);
  }
  return r;
}

namespace {

std::uint32_t degree_of(const Monomial& m) {
  std::uint32_t d = 0;
  for (auto e : m) d += e;
  return d;
}

// Display order: higher total degree first, then reverse of storage order.
bool display_before(const Monomial& a, const Monomial& b) {
  const auto da = degree_of(a), db = degree_of(b);
  if (da != db) return da > db;
  return b < a;
}

}  // namespace

std::string WeylElement::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(),
            [](const auto& x, const auto& y) { return display_before(x.first, y.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : ts) {
    std::string mono;
    for (std::size_t i = 0; i < sig_->size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += sig_->generator(i).name;
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    const Rational mag = abs(c);
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

WeylElement normal_order(const WeylElement& a, const WeylElement& b) { return a * b; }

WeylElement commutator(const WeylElement& a, const WeylElement& b) { return a * b - b * a; }

WeylElement twisted_image(const WeylElement& e, SignaturePtr target, const std::string& t_name) {
  const auto& sig = *e.signature();
  if (!sig.is_twisted()) throw std::invalid_argument("element is not in the twisted algebra");
  std::size_t s_idx = 0, t_idx = 1;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (sig.generator(i).kind == GenKind::Shift) s_idx = i;
    if (sig.generator(i).kind == GenKind::Shifted) t_idx = i;
  }
  const auto t = WeylElement::generator(target, t_name);
  const auto dt = WeylElement::generator(target, "d" + t_name);
  const auto s_image = -(dt * t);
  WeylElement r(target);
  for (const auto& [m, c] : e.terms()) {
    r += s_image.pow(m[s_idx]) * t.pow(m[t_idx]) * c;
  }
  return r;
}

}  // namespace mbfun
