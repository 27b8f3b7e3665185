#include "mbfun/annihilator.hpp"

#include <algorithm>
#include <stdexcept>

#include "mbfun/error.hpp"

namespace mbfun {

std::vector<std::string> common_coordinates(const std::vector<MultiPoly>& polys) {
  std::vector<std::string> vars;
  for (const auto& p : polys) vars = merge_variables(vars, p.variables());
  return vars;
}

UniPoly falling_factorial_in_s(unsigned mu) {
  // theta - i = -s - 1 - i
  UniPoly r = UniPoly::constant(1);
  for (unsigned i = 0; i < mu; ++i) r *= UniPoly({Rational(-1 - static_cast<int>(i)), Rational(-1)});
  return r;
}

namespace {

void check_reserved(const std::vector<std::string>& coords, const std::vector<std::string>& reserved) {
  for (const auto& c : coords) {
    if (std::find(reserved.begin(), reserved.end(), c) != reserved.end()) {
      throw std::invalid_argument("variable name " + c + " is reserved for the b-function parameter");
    }
  }
}

std::vector<std::string> default_s_names(std::size_t k) {
  if (k == 1) return {"s"};
  std::vector<std::string> r;
  for (std::size_t j = 1; j <= k; ++j) r.push_back("s" + std::to_string(j));
  return r;
}

// Weight-0 image in D_n[s] of a multi-homogeneous element of the eliminated
// ideal in D(x, t_1..t_k).
WeylElement to_s_algebra(const WeylElement& g, const std::vector<std::string>& t_names,
                         const std::vector<std::string>& s_names, const SignaturePtr& target) {
  const auto& sig = g.signature();
  WeylElement e = g;
  for (const auto& t : t_names) {
    const auto ti = sig->index(t), di = sig->index("d" + t);
    std::optional<int> weight;
    for (const auto& [m, c] : e.terms()) {
      const int w = static_cast<int>(m[di]) - static_cast<int>(m[ti]);
      if (weight && *weight != w) throw std::logic_error("eliminated element is not homogeneous");
      weight = w;
    }
    if (!weight || *weight == 0) continue;
    if (*weight > 0) {
      e = WeylElement::generator(sig, t).pow(static_cast<unsigned>(*weight)) * e;
    } else {
      e = WeylElement::generator(sig, "d" + t).pow(static_cast<unsigned>(-*weight)) * e;
    }
  }
  WeylElement out(target);
  for (const auto& [m, c] : e.terms()) {
    Monomial xm{};
    WeylElement factor = WeylElement::constant(target, c);
    for (std::size_t i = 0; i < sig->size(); ++i) {
      if (m[i] == 0) continue;
      const auto& name = sig->generator(i).name;
      if (auto j = target->find(name)) xm[*j] = m[i];
    }
    for (std::size_t j = 0; j < t_names.size(); ++j) {
      const unsigned mu = m[sig->index(t_names[j])];
      if (mu == 0) continue;
      factor = factor * WeylElement::from_poly(target, falling_factorial_in_s(mu).to_multipoly(s_names[j]));
    }
    out += WeylElement::monomial(target, xm) * factor;
  }
  return out;
}

UniPoly gcd_of_univariate(const std::vector<WeylElement>& gens) {
  UniPoly g;
  for (const auto& e : gens) g = gcd(g, UniPoly::from_multipoly(e.to_poly()));
  return g;
}

std::vector<std::string> coordinate_and_derivation_names(const std::vector<std::string>& coords) {
  std::vector<std::string> r = coords;
  for (const auto& c : coords) r.push_back("d" + c);
  return r;
}

}  // namespace

LeftIdeal ann_fs(const PowerProduct& p) {
  if (p.factors.empty()) throw std::invalid_argument("ann_fs needs at least one factor");
  const std::size_t k = p.factors.size();
  const auto s_names = p.s_names.empty() ? default_s_names(k) : p.s_names;
  if (s_names.size() != k) throw std::invalid_argument("one s-variable per factor required");
  for (const auto& f : p.factors) {
    if (f.is_zero()) throw MathError("factor must be nonzero");
  }
  const auto coords = common_coordinates(p.factors);
  check_reserved(coords, s_names);

  std::vector<std::string> xt = coords, uv, ts, us, vs;
  for (std::size_t j = 1; j <= k; ++j) {
    ts.push_back("t_" + std::to_string(j));
    us.push_back("u_" + std::to_string(j));
    vs.push_back("v_" + std::to_string(j));
  }
  xt.insert(xt.end(), ts.begin(), ts.end());
  uv = us;
  uv.insert(uv.end(), vs.begin(), vs.end());
  const auto W = Signature::weyl(xt, uv);

  std::vector<WeylElement> fs;
  for (const auto& f : p.factors) fs.push_back(WeylElement::from_poly(W, f.with_variables(coords)));

  LeftIdeal I{W, {}};
  for (std::size_t j = 0; j < k; ++j) {
    const auto u = WeylElement::generator(W, us[j]);
    I.generators.push_back(WeylElement::generator(W, ts[j]) - u * fs[j]);
    I.generators.push_back(u * WeylElement::generator(W, vs[j]) - WeylElement::constant(W, 1));
  }
  for (std::size_t i = 0; i < coords.size(); ++i) {
    WeylElement e = WeylElement::generator(W, "d" + coords[i]);
    for (std::size_t j = 0; j < k; ++j) {
      const auto fi = p.factors[j].with_variables(coords).derivative(i);
      if (fi.is_zero()) continue;
      e += WeylElement::generator(W, us[j]) * WeylElement::from_poly(W, fi) *
           WeylElement::generator(W, "d" + ts[j]);
    }
    I.generators.push_back(e);
  }

  const auto J = eliminate(I, uv);
  const auto target = Signature::weyl(coords, s_names);
  LeftIdeal out{target, {}};
  for (const auto& g : J.generators) {
    auto e = to_s_algebra(g, ts, s_names, target);
    if (!e.is_zero()) out.generators.push_back(std::move(e));
  }
  return groebner_left(out, MonomialOrder::degrevlex(target)).ideal();
}

BFunction bernstein_sato(const MultiPoly& F) {
  if (F.is_constant()) throw MathError("bernstein_sato needs a nonconstant polynomial");
  auto ann = ann_fs({{F}, {"s"}});
  const auto coords = common_coordinates({F});
  ann.generators.push_back(WeylElement::from_poly(ann.signature, F.with_variables(coords)));
  const auto elim = eliminate(ann, coordinate_and_derivation_names(coords));
  const auto b = gcd_of_univariate(elim.generators);
  if (b.is_zero()) throw MathError("elimination produced no b-function");
  return BFunction::from_poly(b);
}

MultiPoly polynomial_gcd(const MultiPoly& F, const MultiPoly& G) {
  const auto vars = common_coordinates({F, G});
  const auto f = F.with_variables(vars);
  const auto g = G.with_variables(vars);
  if (f.is_zero()) return g.is_zero() ? g : g.primitive();
  if (g.is_zero()) return f.primitive();
  if (f.is_constant() || g.is_constant()) return MultiPoly::constant(vars, 1);
  auto rvars = vars;
  rvars.push_back("y_");
  const auto R = Signature::commutative(rvars);
  const auto y = WeylElement::generator(R, "y_");
  const auto one = WeylElement::constant(R, 1);
  const auto wf = WeylElement::from_poly(R, f);
  const auto wg = WeylElement::from_poly(R, g);
  const auto elim = eliminate({R, {y * wf, (one - y) * wg}}, {"y_"});
  if (elim.generators.size() != 1) throw std::logic_error("lcm ideal is not principal");
  const auto lcm = elim.generators.front().to_poly().with_variables(vars);
  MultiPoly quotient;
  if (!(f * g).divides_into(lcm, &quotient)) throw std::logic_error("lcm does not divide F*G");
  return quotient.primitive();
}

bool coprime(const MultiPoly& F, const MultiPoly& G) { return polynomial_gcd(F, G).is_constant(); }

SabbahLineResult sabbah_line(const MultiPoly& F, const MultiPoly& G, unsigned m) {
  if (F.is_zero() || G.is_zero()) throw MathError("F and G must be nonzero");
  if (!coprime(F, G)) throw MathError("F and G are not coprime");
  auto ann = ann_fs({{F, G}, {"s1", "s2"}});
  const auto coords = common_coordinates({F, G});
  ann.generators.push_back(
      WeylElement::from_poly(ann.signature, F.with_variables(coords) * G.with_variables(coords)));
  const auto elim = eliminate(ann, coordinate_and_derivation_names(coords));

  SabbahLineResult r;
  const UniPoly s = UniPoly::monomial(1);
  const UniPoly s2 = UniPoly({Rational(-static_cast<int>(m) - 2), Rational(-1)});
  UniPoly g;
  for (const auto& e : elim.generators) {
    const auto p = e.to_poly().with_variables({"s1", "s2"});
    r.ideal.push_back(p);
    UniPoly spec;
    for (const auto& [exp, c] : p.terms()) spec += s.pow(exp[0]) * s2.pow(exp[1]) * c;
    g = gcd(g, spec);
  }
  if (g.is_zero()) {
    throw MathError("zero specialization: the Bernstein-Sato ideal vanishes on s2 = -s - m - 2");
  }
  r.b = BFunction::from_poly(g);
  return r;
}

}  // namespace mbfun
