#include "mbfun/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "mbfun/error.hpp"

namespace mbfun {

std::uint32_t max_groebner_degree() {
  if (const char* v = std::getenv("MBFUN_MAX_DEGREE")) {
    char* end = nullptr;
    const long d = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && d > 0) return static_cast<std::uint32_t>(d);
  }
  return 24;
}

namespace {

std::uint32_t degree_of(const Monomial& m, std::size_t n) {
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < n; ++i) d += m[i];
  return d;
}

}  // namespace

MonomialOrder::MonomialOrder(SignaturePtr sig, std::vector<std::vector<std::int64_t>> rows,
                             Tiebreak tiebreak)
    : sig_(std::move(sig)), rows_(std::move(rows)), tiebreak_(tiebreak) {
  for (const auto& r : rows_) {
    if (r.size() != sig_->size()) throw std::invalid_argument("weight row length mismatch");
  }
}

MonomialOrder MonomialOrder::degrevlex(SignaturePtr sig) { return MonomialOrder(std::move(sig), {}); }

MonomialOrder MonomialOrder::lex(SignaturePtr sig) {
  return MonomialOrder(std::move(sig), {}, Tiebreak::Lex);
}

MonomialOrder MonomialOrder::weighted(SignaturePtr sig, std::vector<std::int64_t> w) {
  return MonomialOrder(std::move(sig), {std::move(w)});
}

MonomialOrder MonomialOrder::elimination(SignaturePtr sig, const std::vector<std::size_t>& drop) {
  std::vector<std::int64_t> row(sig->size(), 0);
  for (auto i : drop) row.at(i) = 1;
  return MonomialOrder(std::move(sig), {std::move(row)});
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = sig_->size();
  if (sig_->homogenized()) {
    const auto da = degree_of(a, n), db = degree_of(b, n);
    if (da != db) return da < db ? -1 : 1;
  }
  for (const auto& row : rows_) {
    std::int64_t wa = 0, wb = 0;
    for (std::size_t i = 0; i < n; ++i) {
      wa += row[i] * a[i];
      wb += row[i] * b[i];
    }
    if (wa != wb) return wa < wb ? -1 : 1;
  }
  if (tiebreak_ == Tiebreak::DegRevLex) {
    const auto da = degree_of(a, n), db = degree_of(b, n);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = n; i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

void MonomialOrder::validate() const {
  const auto& sig = *sig_;
  if (sig.is_twisted()) {
    throw std::invalid_argument("Groebner bases in the twisted algebra go through its Weyl image");
  }
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < sig.size(); ++i) {
      const auto& g = sig.generator(i);
      if (g.kind == GenKind::Homogenizer && row[i] != 0) {
        throw std::invalid_argument("homogenizing variable must have weight 0");
      }
      if (!sig.homogenized() && row[i] < 0) {
        throw std::invalid_argument("negative weights need a homogenized algebra");
      }
      if (g.kind == GenKind::Coordinate && g.partner >= 0 &&
          row[i] + row[static_cast<std::size_t>(g.partner)] < 0) {
        throw std::invalid_argument("inadmissible weight: w(" + g.name + ") + w(d" + g.name +
                                    ") < 0");
      }
    }
  }
}

Monomial leading_monomial(const WeylElement& e, const MonomialOrder& order) {
  if (e.is_zero()) throw std::logic_error("leading monomial of zero");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : e.terms()) {
    if (best == nullptr || order.compare(m, *best) > 0) best = &m;
  }
  return *best;
}

namespace {

struct Term {
  Monomial m;
  Integer c;
};

// Terms sorted by decreasing monomial order.
using Poly = std::vector<Term>;

class Engine {
 public:
  explicit Engine(const MonomialOrder& order)
      : order_(order), sig_(*order.signature()), n_(sig_.size()), comm_(sig_.is_commutative()) {}

  const MonomialOrder& order() const { return order_; }

  void sort(Poly& p) const {
    std::sort(p.begin(), p.end(),
              [&](const Term& a, const Term& b) { return order_.compare(a.m, b.m) > 0; });
  }

  // Integer polynomial proportional to e; *scale receives the factor.
  Poly from_element(const WeylElement& e, Rational* scale = nullptr) const {
    Integer den = 1;
    for (const auto& [m, c] : e.terms()) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    Poly p;
    p.reserve(e.terms().size());
    for (const auto& [m, c] : e.terms()) p.push_back({m, c.get_num() * (den / c.get_den())});
    sort(p);
    if (scale != nullptr) *scale = Rational(den);
    return p;
  }

  WeylElement to_element(const Poly& p, const SignaturePtr& sig, const Rational& scale = 1) const {
    WeylElement e(sig);
    for (const auto& t : p) e.add_term(t.m, Rational(t.c) / scale);
    return e;
  }

  bool divides(const Monomial& a, const Monomial& b) const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (a[i] > b[i]) return false;
    }
    return true;
  }

  Monomial quotient(const Monomial& b, const Monomial& a) const {
    Monomial q{};
    for (std::size_t i = 0; i < n_; ++i) q[i] = static_cast<std::uint16_t>(b[i] - a[i]);
    return q;
  }

  Monomial lcm(const Monomial& a, const Monomial& b) const {
    Monomial l{};
    for (std::size_t i = 0; i < n_; ++i) l[i] = std::max(a[i], b[i]);
    return l;
  }

  std::uint32_t degree(const Monomial& m) const { return degree_of(m, n_); }

  // mono * g, normal ordered.
  Poly left_multiply(const Monomial& mono, const Poly& g) const {
    if (comm_) {
      Poly r = g;
      for (auto& t : r) {
        for (std::size_t i = 0; i < n_; ++i) t.m[i] = checked_add16(t.m[i], mono[i]);
      }
      return r;
    }
    std::map<Monomial, Integer> acc;
    for (const auto& t : g) {
      for (const auto& [m, k] : multiply_monomials(sig_, mono, t.m)) acc[m] += k * t.c;
    }
    Poly r;
    r.reserve(acc.size());
    for (auto& [m, c] : acc) {
      if (c != 0) r.push_back({m, std::move(c)});
    }
    sort(r);
    return r;
  }

  // a*f - b*g, both sorted.
  Poly combine(const Integer& a, const Poly& f, const Integer& b, const Poly& g) const {
    Poly r;
    r.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() || j < g.size()) {
      int cmp;
      if (i == f.size()) {
        cmp = -1;
      } else if (j == g.size()) {
        cmp = 1;
      } else {
        cmp = order_.compare(f[i].m, g[j].m);
      }
      if (cmp > 0) {
        r.push_back({f[i].m, a * f[i].c});
        ++i;
      } else if (cmp < 0) {
        r.push_back({g[j].m, -b * g[j].c});
        ++j;
      } else {
        Integer c = a * f[i].c - b * g[j].c;
        if (c != 0) r.push_back({f[i].m, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  static Integer content(const Poly& p) {
    Integer g = 0;
    for (const auto& t : p) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  static void divide(Poly& p, const Integer& c) {
    for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
  }

  // Primitive, positive leading coefficient.
  static void normalize(Poly& p) {
    if (p.empty()) return;
    Integer g = content(p);
    if (p.front().c < 0) g = -g;
    divide(p, g);
  }

  // Full reduction of f modulo the polynomials in `basis` selected by
  // `active`.  Returns the remainder; *scale is multiplied by the factor the
  // remainder carries relative to f.
  Poly reduce(Poly f, const std::vector<Poly>& basis, const std::vector<std::size_t>& active,
              Rational* scale) const {
    Poly r;
    while (!f.empty()) {
      const Term& lt = f.front();
      std::size_t best = basis.size();
      for (auto idx : active) {
        if (!divides(basis[idx].front().m, lt.m)) continue;
        if (best == basis.size() || basis[idx].size() < basis[best].size()) best = idx;
      }
      if (best == basis.size()) {
        r.push_back(lt);
        f.erase(f.begin());
        continue;
      }
      const Poly& g = basis[best];
      Poly q = left_multiply(quotient(lt.m, g.front().m), g);
      Integer gc;
      mpz_gcd(gc.get_mpz_t(), lt.c.get_mpz_t(), q.front().c.get_mpz_t());
      Integer a = q.front().c / gc;
      Integer b = lt.c / gc;
      if (a < 0) {
        a = -a;
        b = -b;
      }
      f = combine(a, f, b, q);
      if (a != 1) {
        for (auto& t : r) t.c *= a;
        if (scale != nullptr) *scale *= a;
      }
      Integer c = content(f);
      if (c != 1 && c != 0) {
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), content(r).get_mpz_t());
        if (c != 1 && c != 0) {
          divide(f, c);
          divide(r, c);
          if (scale != nullptr) *scale /= c;
        }
      }
    }
    return r;
  }

 private:
  const MonomialOrder& order_;
  const Signature& sig_;
  std::size_t n_;
  bool comm_;
};

}  // namespace

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t degree;
};

class Buchberger {
 public:
  explicit Buchberger(const MonomialOrder& order)
      : eng_(order), comm_(order.signature()->is_commutative()), cap_(max_groebner_degree()) {}

  void add_generator(Poly f) {
    Rational ignored = 1;
    f = eng_.reduce(std::move(f), polys_, active_, &ignored);
    if (!f.empty()) insert(std::move(f));
  }

  void run() {
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const auto& a = pairs_[k];
        const auto& b = pairs_[best];
        if (a.degree != b.degree ? a.degree < b.degree
                                 : eng_.order().compare(a.lcm, b.lcm) < 0) {
          best = k;
        }
      }
      const Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      Poly s = spoly(p);
      if (s.empty()) continue;
      Rational ignored = 1;
      s = eng_.reduce(std::move(s), polys_, active_, &ignored);
      if (!s.empty()) insert(std::move(s));
    }
  }

  // Minimal reduced basis.
  std::vector<Poly> finish() {
    std::vector<std::size_t> minimal;
    for (auto i : active_) {
      bool redundant = false;
      for (auto j : active_) {
        if (i != j && eng_.divides(polys_[j].front().m, polys_[i].front().m) &&
            (polys_[j].front().m != polys_[i].front().m || j < i)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) minimal.push_back(i);
    }
    std::vector<Poly> out;
    for (auto i : minimal) {
      std::vector<std::size_t> others;
      for (auto j : minimal) {
        if (j != i) others.push_back(j);
      }
      Poly head{polys_[i].front()};
      Poly tail(polys_[i].begin() + 1, polys_[i].end());
      Rational scale = 1;
      tail = eng_.reduce(std::move(tail), polys_, others, &scale);
      // tail now equals scale * (old tail) modulo the ideal; rescale the head.
      const Integer num = scale.get_num(), den = scale.get_den();
      head.front().c *= num;
      for (auto& t : tail) t.c *= den;
      Poly r = head;
      r.insert(r.end(), tail.begin(), tail.end());
      Engine::normalize(r);
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
      return eng_.order().compare(a.front().m, b.front().m) < 0;
    });
    return out;
  }

  const Engine& engine() const { return eng_; }

 private:
  Poly spoly(const Pair& p) const {
    const Poly& f = polys_[p.i];
    const Poly& g = polys_[p.j];
    Poly a = eng_.left_multiply(eng_.quotient(p.lcm, f.front().m), f);
    Poly b = eng_.left_multiply(eng_.quotient(p.lcm, g.front().m), g);
    Integer gc;
    mpz_gcd(gc.get_mpz_t(), a.front().c.get_mpz_t(), b.front().c.get_mpz_t());
    Poly s = eng_.combine(b.front().c / gc, a, a.front().c / gc, b);
    Engine::normalize(s);
    return s;
  }

  void insert(Poly h) {
    Engine::normalize(h);
    std::uint32_t deg = 0;
    for (const auto& t : h) deg = std::max(deg, eng_.degree(t.m));
    if (deg > cap_) {
      throw CapabilityError("Groebner basis degree " + std::to_string(deg) +
                            " exceeds MBFUN_MAX_DEGREE=" + std::to_string(cap_));
    }
    const std::size_t k = polys_.size();
    const Monomial lh = h.front().m;
    polys_.push_back(std::move(h));

    // Old pairs whose lcm is a multiple of lm(h) with both side lcms different.
    std::vector<Pair> kept;
    for (const auto& p : pairs_) {
      const bool chain = eng_.divides(lh, p.lcm) &&
                         eng_.lcm(polys_[p.i].front().m, lh) != p.lcm &&
                         eng_.lcm(polys_[p.j].front().m, lh) != p.lcm;
      if (!chain) kept.push_back(p);
    }
    pairs_ = std::move(kept);

    // New pairs: keep those whose lcm is minimal, one per lcm.
    std::vector<Pair> fresh;
    for (auto i : active_) {
      const Monomial l = eng_.lcm(polys_[i].front().m, lh);
      fresh.push_back({i, k, l, eng_.degree(l)});
    }
    std::vector<Pair> chosen;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      bool drop = false;
      for (std::size_t b = 0; b < fresh.size() && !drop; ++b) {
        if (a == b) continue;
        if (eng_.divides(fresh[b].lcm, fresh[a].lcm) &&
            (fresh[b].lcm != fresh[a].lcm || b < a)) {
          drop = true;
        }
      }
      if (drop) continue;
      if (comm_) {
        // Coprime leading monomials reduce to zero.
        bool coprime = true;
        const Monomial& li = polys_[fresh[a].i].front().m;
        for (std::size_t v = 0; v < kMaxGenerators; ++v) {
          if (li[v] != 0 && lh[v] != 0) coprime = false;
        }
        if (coprime) continue;
      }
      chosen.push_back(fresh[a]);
    }
    pairs_.insert(pairs_.end(), chosen.begin(), chosen.end());

    std::vector<std::size_t> still;
    for (auto i : active_) {
      if (!eng_.divides(lh, polys_[i].front().m)) still.push_back(i);
    }
    still.push_back(k);
    active_ = std::move(still);
  }

  Engine eng_;
  bool comm_;
  std::uint32_t cap_;
  std::vector<Poly> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

GroebnerBasis::GroebnerBasis(MonomialOrder order, std::vector<WeylElement> elements)
    : order_(std::move(order)), elements_(std::move(elements)) {}

WeylElement GroebnerBasis::normal_form(const WeylElement& e) const {
  if (!same_signature(e.signature(), signature()) && !e.is_zero()) {
    throw std::invalid_argument("signature mismatch in normal form");
  }
  Engine eng(order_);
  std::vector<Poly> basis;
  std::vector<std::size_t> active;
  for (const auto& g : elements_) {
    active.push_back(basis.size());
    basis.push_back(eng.from_element(g));
  }
  Rational scale = 1;
  Poly f = eng.from_element(e, &scale);
  Poly r = eng.reduce(std::move(f), basis, active, &scale);
  return eng.to_element(r, signature(), scale);
}

bool GroebnerBasis::contains_one() const {
  return std::any_of(elements_.begin(), elements_.end(), [](const WeylElement& g) {
    return g.terms().size() == 1 && g.terms().begin()->first == Monomial{};
  });
}

GroebnerBasis groebner_left(const LeftIdeal& ideal, const MonomialOrder& order) {
  order.validate();
  if (!same_signature(ideal.signature, order.signature())) {
    throw std::invalid_argument("order and ideal use different algebras");
  }
  Buchberger bb(order);
  std::vector<Poly> gens;
  for (const auto& g : ideal.generators) {
    if (g.is_zero()) continue;
    if (!same_signature(g.signature(), ideal.signature)) {
      throw std::invalid_argument("generator signature mismatch");
    }
    gens.push_back(bb.engine().from_element(g));
  }
  std::sort(gens.begin(), gens.end(), [&](const Poly& a, const Poly& b) {
    return order.compare(a.front().m, b.front().m) < 0;
  });
  for (auto& g : gens) bb.add_generator(std::move(g));
  bb.run();
  std::vector<WeylElement> out;
  for (const auto& p : bb.finish()) out.push_back(bb.engine().to_element(p, ideal.signature));
  return GroebnerBasis(order, std::move(out));
}

LeftIdeal eliminate(const LeftIdeal& ideal, const std::vector<std::string>& drop) {
  const auto& sig = *ideal.signature;
  std::vector<std::size_t> idx;
  for (const auto& name : drop) idx.push_back(sig.index(name));
  for (auto i : idx) {
    const auto& g = sig.generator(i);
    if (g.kind == GenKind::Homogenizer) throw std::invalid_argument("cannot eliminate h");
    if (g.partner >= 0 &&
        std::find(idx.begin(), idx.end(), static_cast<std::size_t>(g.partner)) == idx.end()) {
      throw std::invalid_argument("invalid drop set: " + g.name + " without its partner");
    }
  }
  std::vector<std::string> keep;
  std::vector<std::size_t> keep_idx;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (std::find(idx.begin(), idx.end(), i) == idx.end()) {
      keep.push_back(sig.generator(i).name);
      keep_idx.push_back(i);
    }
  }
  const auto gb = groebner_left(ideal, MonomialOrder::elimination(ideal.signature, idx));
  LeftIdeal out{sig.restricted(keep), {}};
  for (const auto& g : gb.elements()) {
    if (g.supported_on(keep_idx)) out.generators.push_back(g.remap(out.signature));
  }
  return out;
}

std::int64_t weight_degree(const WeylElement& e, const WeightMap& w) {
  if (e.is_zero()) throw std::logic_error("weight of zero");
  const auto& sig = *e.signature();
  std::vector<std::int64_t> wv(sig.size(), 0);
  for (const auto& [name, v] : w) {
    if (auto i = sig.find(name)) wv[*i] = v;
  }
  std::int64_t best = 0;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < sig.size(); ++i) d += wv[i] * m[i];
    if (first || d > best) best = d;
    first = false;
  }
  return best;
}

WeylElement initial_form(const WeylElement& e, const WeightMap& w) {
  if (e.is_zero()) return e;
  const auto& sig = *e.signature();
  std::vector<std::int64_t> wv(sig.size(), 0);
  for (const auto& [name, v] : w) {
    if (auto i = sig.find(name)) wv[*i] = v;
  }
  const auto top = weight_degree(e, w);
  WeylElement r(e.signature());
  for (const auto& [m, c] : e.terms()) {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < sig.size(); ++i) d += wv[i] * m[i];
    if (d == top) r.add_term(m, c);
  }
  return r;
}

WeylElement homogenize(const WeylElement& e, const SignaturePtr& homogenized) {
  if (e.is_zero()) return WeylElement(homogenized);
  const auto h = static_cast<std::size_t>(homogenized->homogenizer());
  const auto lifted = e.remap(homogenized);
  const auto top = lifted.total_degree();
  WeylElement r(homogenized);
  for (const auto& [m, c] : lifted.terms()) {
    std::uint32_t d = 0;
    for (auto x : m) d += x;
    Monomial mh = m;
    mh[h] = checked_add16(mh[h], top - d);
    r.add_term(mh, c);
  }
  return r;
}

LeftIdeal initial_ideal_weight(const LeftIdeal& ideal, const WeightMap& w) {
  const auto& sig = ideal.signature;
  for (const auto& [name, v] : w) sig->index(name);
  auto weight_of = [&](const std::string& name) {
    auto it = w.find(name);
    return it == w.end() ? std::int64_t{0} : it->second;
  };
  for (const auto& g : sig->generators()) {
    if (g.kind != GenKind::Coordinate || g.partner < 0) continue;
    const auto sum = weight_of(g.name) + weight_of(sig->generator(static_cast<std::size_t>(g.partner)).name);
    if (sum < 0) throw std::invalid_argument("inadmissible weight for " + g.name);
    if (sum > 0) {
      throw CapabilityError("initial ideals are supported only for weights with w(x) + w(dx) = 0");
    }
  }
  const auto hsig = sig->homogenization();
  std::vector<std::int64_t> row(hsig->size(), 0);
  for (std::size_t i = 0; i < hsig->size(); ++i) {
    if (hsig->generator(i).kind != GenKind::Homogenizer) row[i] = weight_of(hsig->generator(i).name);
  }
  LeftIdeal hom{hsig, {}};
  for (const auto& g : ideal.generators) hom.generators.push_back(homogenize(g, hsig));
  const auto gb = groebner_left(hom, MonomialOrder::weighted(hsig, row));
  LeftIdeal out{sig, {}};
  for (const auto& g : gb.elements()) {
    out.generators.push_back(initial_form(g.dehomogenize().remap(sig), w));
  }
  return out;
}

}  // namespace mbfun
