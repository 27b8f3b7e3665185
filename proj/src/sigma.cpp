#include "mbfun/sigma.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "mbfun/annihilator.hpp"
#include "mbfun/error.hpp"
#include "mbfun/laurent.hpp"
#include "mbfun/linsolve.hpp"

namespace mbfun {

namespace {

// The module O[1/G][dt] delta with delta = delta(t - F/G).
class SigmaModel {
 public:
  SigmaModel(const MultiPoly& F, const MultiPoly& G) {
    coords_ = common_coordinates({F, G});
    F_ = F.with_variables(coords_);
    G_ = G.with_variables(coords_);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      dG_.push_back(G_.derivative(i));
      h_.push_back(F_.derivative(i) * G_ - F_ * dG_.back());
    }
    Gp_.push_back(MultiPoly::constant(coords_, 1));
  }

  const std::vector<std::string>& coordinates() const { return coords_; }
  const MultiPoly& F() const { return F_; }
  const MultiPoly& G() const { return G_; }
  const MultiPoly& h(std::size_t i) const { return h_[i]; }
  const MultiPoly& dG(std::size_t i) const { return dG_[i]; }

  MultiPoly G_pow(unsigned k) {
    while (Gp_.size() <= k) Gp_.push_back(Gp_.back() * G_);
    return Gp_[k];
  }

  SigmaModelElement sigma(unsigned m) const { return {m, {MultiPoly::constant(coords_, 1)}}; }

  SigmaModelElement dt(const SigmaModelElement& v) const {
    SigmaModelElement r{v.e, {MultiPoly(coords_)}};
    r.p.insert(r.p.end(), v.p.begin(), v.p.end());
    return trim(std::move(r));
  }

  // d_i(G^{-e} q dt^k) = G^{-e-2} [G (G q_i - e G_i q) dt^k - q h_i dt^{k+1}]
  SigmaModelElement dx(std::size_t i, const SigmaModelElement& v) const {
    SigmaModelElement r{v.e + 2, std::vector<MultiPoly>(v.p.size() + 1, MultiPoly(coords_))};
    const Rational e(static_cast<int>(v.e));
    for (std::size_t k = 0; k < v.p.size(); ++k) {
      const auto& q = v.p[k];
      if (q.is_zero()) continue;
      r.p[k] += G_ * (G_ * q.derivative(i) - dG_[i] * q * e);
      r.p[k + 1] -= q * h_[i];
    }
    return trim(std::move(r));
  }

  // t(G^{-e} q dt^k) = G^{-e-1} [q F dt^k - k G q dt^{k-1}]
  SigmaModelElement t(const SigmaModelElement& v) const {
    SigmaModelElement r{v.e + 1, std::vector<MultiPoly>(v.p.size(), MultiPoly(coords_))};
    for (std::size_t k = 0; k < v.p.size(); ++k) {
      const auto& q = v.p[k];
      if (q.is_zero()) continue;
      r.p[k] += q * F_;
      if (k > 0) r.p[k - 1] -= G_ * q * Rational(static_cast<int>(k));
    }
    return trim(std::move(r));
  }

  SigmaModelElement raise(const SigmaModelElement& v, unsigned e) {
    if (e < v.e) throw std::logic_error("cannot lower the G exponent");
    SigmaModelElement r = v;
    r.e = e;
    const MultiPoly g = G_pow(e - v.e);
    for (auto& q : r.p) q *= g;
    return r;
  }

  SigmaModelElement add(const SigmaModelElement& a, const SigmaModelElement& b) {
    const unsigned e = std::max(a.e, b.e);
    SigmaModelElement ra = raise(a, e), rb = raise(b, e);
    if (ra.p.size() < rb.p.size()) ra.p.resize(rb.p.size(), MultiPoly(coords_));
    for (std::size_t k = 0; k < rb.p.size(); ++k) ra.p[k] += rb.p[k];
    return trim(std::move(ra));
  }

 private:
  static SigmaModelElement trim(SigmaModelElement v) {
    while (!v.p.empty() && v.p.back().is_zero()) v.p.pop_back();
    return v;
  }

  std::vector<std::string> coords_;
  MultiPoly F_, G_;
  std::vector<MultiPoly> dG_, h_, Gp_;
};

struct OperatorShape {
  std::size_t n;
  std::size_t t, dt;
  std::size_t coord(std::size_t i) const { return i; }
  std::size_t deriv(std::size_t i) const { return n + 1 + i; }
};

OperatorShape shape_of(const Signature& sig, std::size_t n) {
  return {n, sig.index("t"), sig.index("dt")};
}

// dx^beta dt^nu sigma, then t^mu of it, memoized.
class ActionTable {
 public:
  ActionTable(SigmaModel& model, unsigned m) : model_(model), m_(m) {}

  const SigmaModelElement& get(const Exponent& beta, unsigned nu, unsigned mu) {
    const Key key{beta, nu, mu};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    SigmaModelElement v;
    if (mu > 0) {
      v = model_.t(get(beta, nu, mu - 1));
    } else {
      auto nz = std::find_if(beta.begin(), beta.end(), [](auto e) { return e > 0; });
      if (nz != beta.end()) {
        Exponent prev = beta;
        const auto i = static_cast<std::size_t>(nz - beta.begin());
        --prev[i];
        v = model_.dx(i, get(prev, nu, 0));
      } else if (nu > 0) {
        v = model_.dt(get(beta, nu - 1, 0));
      } else {
        v = model_.sigma(m_);
      }
    }
    return cache_.emplace(key, std::move(v)).first->second;
  }

 private:
  using Key = std::tuple<Exponent, unsigned, unsigned>;
  SigmaModel& model_;
  unsigned m_;
  std::map<Key, SigmaModelElement> cache_;
};

SigmaModelElement apply_monomial(ActionTable& table, const OperatorShape& sh,
                                 const Monomial& mono, const Rational& c) {
  Exponent beta(sh.n), alpha(sh.n);
  for (std::size_t i = 0; i < sh.n; ++i) {
    beta[i] = mono[sh.deriv(i)];
    alpha[i] = mono[sh.coord(i)];
  }
  SigmaModelElement v = table.get(beta, mono[sh.dt], mono[sh.t]);
  for (auto& q : v.p) q = q.shifted(alpha) * c;
  return v;
}

unsigned seed_degree(const std::vector<WeylElement>& seeds) {
  unsigned d = 0;
  for (const auto& s : seeds) d = std::max(d, s.total_degree());
  return d;
}

// All annihilating operators of total degree <= d, as a spanning set.
std::vector<WeylElement> kernel_at_degree(SigmaModel& model, const SignaturePtr& sig, unsigned m,
                                          unsigned d) {
  const std::size_t n = model.coordinates().size();
  const OperatorShape sh = shape_of(*sig, n);
  ActionTable table(model, m);
  std::vector<Monomial> cols;
  for (const auto& ex : exponents_up_to(2 * n + 2, d)) {
    Monomial mono{};
    for (std::size_t i = 0; i < ex.size(); ++i) mono[i] = static_cast<std::uint16_t>(ex[i]);
    cols.push_back(mono);
  }
  std::vector<SigmaModelElement> images;
  unsigned E = 0;
  for (const auto& mono : cols) {
    images.push_back(apply_monomial(table, sh, mono, 1));
    E = std::max(E, images.back().e);
  }
  std::map<std::pair<std::size_t, Exponent>, SparseRow> rows;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto v = model.raise(images[c], E);
    for (std::size_t k = 0; k < v.p.size(); ++k) {
      for (const auto& [ex, coef] : v.p[k].terms()) rows[{k, ex}][c] += coef;
    }
  }
  LinearSystem sys(cols.size());
  for (auto& [key, row] : rows) sys.add_equation(std::move(row), 0);
  std::vector<WeylElement> out;
  for (const auto& vec : sys.nullspace()) {
    WeylElement P(sig);
    for (std::size_t c = 0; c < vec.size(); ++c) {
      if (vec[c] != 0) P.add_term(cols[c], vec[c]);
    }
    out.push_back(std::move(P));
  }
  std::sort(out.begin(), out.end(),
            [](const WeylElement& a, const WeylElement& b) { return a.total_degree() < b.total_degree(); });
  return out;
}

SignaturePtr sigma_signature(const std::vector<std::string>& coords) {
  for (const auto& c : coords) {
    if (c == "t" || c == "s") {
      throw std::invalid_argument("variable name " + c + " is reserved");
    }
  }
  auto xt = coords;
  xt.push_back("t");
  return Signature::weyl(xt);
}

}  // namespace

std::vector<WeylElement> sigma_seeds(const MultiPoly& F, const MultiPoly& G, unsigned m,
                                     const SignaturePtr& sig) {
  SigmaModel model(F, G);
  const auto& coords = model.coordinates();
  const auto t = WeylElement::generator(sig, "t");
  const auto dt = WeylElement::generator(sig, "dt");
  const auto lift = [&](const MultiPoly& p) { return WeylElement::from_poly(sig, p); };
  std::vector<WeylElement> seeds{t * lift(model.G()) - lift(model.F())};
  for (std::size_t i = 0; i < coords.size(); ++i) {
    seeds.push_back(lift(model.G() * model.G()) * WeylElement::generator(sig, "d" + coords[i]) +
                    lift(model.G() * model.dG(i) * Rational(static_cast<int>(m))) +
                    lift(model.h(i)) * dt);
  }
  return seeds;
}

SigmaPresentation build_sigma(const MultiPoly& F, const MultiPoly& G, unsigned m,
                              unsigned kernel_degree) {
  if (F.is_constant()) throw MathError("F must be nonconstant");
  if (G.is_zero()) throw MathError("G must be nonzero");
  const auto coords = common_coordinates({F, G});
  const auto sig = sigma_signature(coords);
  SigmaPresentation pres;
  pres.signature = sig;
  pres.m = m;
  const auto seeds = sigma_seeds(F, G, m, sig);
  const auto order = MonomialOrder::degrevlex(sig);
  if (G.is_constant()) {
    pres.exact = true;
    pres.annihilator = groebner_left({sig, seeds}, order).ideal();
    return pres;
  }
  if (kernel_degree == 0) kernel_degree = seed_degree(seeds) + 1;
  if (kernel_degree > max_groebner_degree()) {
    throw CapabilityError("annihilator search degree exceeds MBFUN_MAX_DEGREE");
  }
  pres.kernel_degree = kernel_degree;
  SigmaModel model(F, G);
  GroebnerBasis gb = groebner_left({sig, seeds}, order);
  for (const auto& P : kernel_at_degree(model, sig, m, kernel_degree)) {
    if (gb.contains(P)) continue;
    auto gens = gb.elements();
    gens.push_back(P);
    gb = groebner_left({sig, gens}, order);
  }
  pres.annihilator = gb.ideal();
  return pres;
}

SigmaModelElement apply_to_sigma(const MultiPoly& F, const MultiPoly& G, unsigned m,
                                 const WeylElement& P) {
  SigmaModel model(F, G);
  const std::size_t n = model.coordinates().size();
  if (!same_signature(P.signature(), sigma_signature(model.coordinates()))) {
    throw std::invalid_argument("operator must live in D(x, t)");
  }
  const OperatorShape sh = shape_of(*P.signature(), n);
  ActionTable table(model, m);
  SigmaModelElement r{0, {}};
  for (const auto& [mono, c] : P.terms()) r = model.add(r, apply_monomial(table, sh, mono, c));
  return r;
}

bool model_is_zero(const SigmaModelElement& v) {
  return std::all_of(v.p.begin(), v.p.end(), [](const MultiPoly& q) { return q.is_zero(); });
}

UniPoly b_section_along_t(const SigmaPresentation& pres) {
  const auto& sig = pres.signature;
  const WeightMap w{{"t", -1}, {"dt", 1}};
  const auto in = initial_ideal_weight(pres.annihilator, w);
  std::vector<std::string> drop;
  for (const auto& c : sig->coordinate_names()) {
    if (c != "t") {
      drop.push_back(c);
      drop.push_back("d" + c);
    }
  }
  const auto J = eliminate(in, drop);
  const auto& jsig = J.signature;
  const auto ti = jsig->index("t"), di = jsig->index("dt");
  UniPoly p;
  for (const auto& g : J.generators) {
    const auto wdeg = weight_degree(g, w);
    WeylElement e = g;
    if (wdeg > 0) {
      e = WeylElement::generator(jsig, "t").pow(static_cast<unsigned>(wdeg)) * e;
    } else if (wdeg < 0) {
      e = WeylElement::generator(jsig, "dt").pow(static_cast<unsigned>(-wdeg)) * e;
    }
    UniPoly q;
    for (const auto& [mono, c] : e.terms()) {
      if (mono[ti] != mono[di]) throw std::logic_error("initial ideal element is not homogeneous");
      UniPoly ff = UniPoly::constant(c);
      for (unsigned i = 0; i < mono[ti]; ++i) ff *= UniPoly::linear_root(Rational(static_cast<int>(i)));
      q += ff;
    }
    p = gcd(p, q);
  }
  if (p.is_zero()) throw MathError("not specializable within bounds: no b-function along t = 0");
  return p.monic();
}

BFunction b_from_theta(const UniPoly& p) { return BFunction::from_poly(p.compose_linear(-1, -1)); }

}  // namespace mbfun
