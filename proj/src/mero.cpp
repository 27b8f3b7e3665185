#include "mbfun/mero.hpp"

#include <cstdlib>
#include <stdexcept>

#include "mbfun/annihilator.hpp"
#include "mbfun/error.hpp"
#include "mbfun/groebner.hpp"
#include "mbfun/sigma.hpp"

namespace mbfun {

std::string to_string(Certification c) {
  switch (c) {
    case Certification::Certified: return "CERTIFIED";
    case Certification::Uncertified: return "UNCERTIFIED";
    case Certification::Failed: return "FAILED";
  }
  return "FAILED";
}

namespace {

struct CertifyOutcome {
  bool witness = false;
  std::optional<Rational> divisor_root;  // b/(s - r) also admits a witness
};

CertifyOutcome certify_impl(MeroResult& r, const MultiPoly& F, const MultiPoly& G, unsigned m,
                            const CertifyBounds& bounds) {
  CertifyOutcome out;
  r.witness.reset();
  r.witness_N = 0;
  for (unsigned N = 1; N <= bounds.N && !r.witness; ++N) {
    r.witness = verify_functional_equation(r.b, F, G, m, N, bounds.deg);
    if (r.witness) r.witness_N = N;
  }
  out.witness = r.witness.has_value();
  if (!out.witness) {
    r.status = Certification::Failed;
    r.notes.push_back("no functional-equation witness with N <= " + std::to_string(bounds.N) +
                      ", degree <= " + std::to_string(bounds.deg));
    return out;
  }
  for (const auto& root : r.b.root_set()) {
    const auto [q, rem] = r.b.poly().divmod(UniPoly::linear_root(root));
    if (verify_functional_equation(BFunction::from_poly(q), F, G, m, bounds.N, bounds.deg)) {
      out.divisor_root = root;
      r.status = Certification::Failed;
      r.notes.push_back("proper divisor without root " + to_display_string(root) +
                        " also satisfies the functional equation");
      return out;
    }
  }
  if (!r.b.splits()) r.notes.push_back("minimality checked for rational roots only");
  r.status = Certification::Certified;
  return out;
}

void require_input(const MultiPoly& F, const MultiPoly& G) {
  if (F.is_zero() || G.is_zero()) throw MathError("F and G must be nonzero");
  if (F.is_constant()) throw MathError("F must be nonconstant");
  if (!coprime(F, G)) throw MathError("F and G are not coprime");
}

unsigned max_kernel_degree(const MeroOptions& opts, unsigned seed_deg) {
  if (opts.max_kernel_degree) return opts.max_kernel_degree;
  return seed_deg + 4;
}

}  // namespace

void certify(MeroResult& r, const MultiPoly& F, const MultiPoly& G, unsigned m, const CertifyBounds& bounds) {
  certify_impl(r, F, G, m, bounds);
}

MeroResult b_mero(const MultiPoly& F, const MultiPoly& G, unsigned m, const MeroOptions& opts) {
  require_input(F, G);
  MeroResult r;
  if (G.is_constant()) {
    const auto pres = build_sigma(F, G, m);
    r.b = b_from_theta(b_section_along_t(pres));
    certify_impl(r, F, G, m, opts.bounds);
    if (r.status != Certification::Certified) {
      throw MathError("engine/oracle disagreement for b_mero: " + r.b.to_string() + " (" + r.notes.back() + ")");
    }
    return r;
  }
  // Kernel degree 0 lets build_sigma pick the seed degree plus one.
  std::optional<SigmaPresentation> pres = build_sigma(F, G, m, 0);
  const unsigned first = pres->kernel_degree;
  const unsigned last = max_kernel_degree(opts, first - 1);
  std::optional<MeroResult> best;
  for (unsigned d = first; d <= last; ++d) {
    MeroResult attempt;
    attempt.kernel_degree = d;
    try {
      if (!pres) pres = build_sigma(F, G, m, d);
      attempt.b = b_from_theta(b_section_along_t(*pres));
      pres.reset();
    } catch (const MathError&) {
      pres.reset();
      continue;
    }
    certify_impl(attempt, F, G, m, opts.bounds);
    if (attempt.status == Certification::Certified) return attempt;
    // A larger annihilator can only shrink b, so the latest candidate is kept.
    best = std::move(attempt);
  }
  if (!best) throw CapabilityError("annihilator search gave no b-function up to degree " + std::to_string(last));
  best->status = Certification::Uncertified;
  best->notes.push_back("annihilator completion not certified up to operator degree " + std::to_string(last));
  return *best;
}

MeroResult b_simple(const MultiPoly& F, const MultiPoly& G, unsigned m, const MeroOptions& opts) {
  const auto mero = b_mero(F, G, m, opts);
  const unsigned start = static_cast<unsigned>(mero.b.degree());
  for (unsigned K = start; K <= start + 4; ++K) {
    EquationSearch q;
    q.F = F;
    q.G = G;
    q.m = m;
    q.N = 1;
    q.op_degree = opts.bounds.deg;
    q.s_degree = opts.bounds.deg;
    q.b_degree = K;
    auto w = search_functional_equation(q);
    if (!w) continue;
    MeroResult r;
    r.b = BFunction::from_poly(w->b);
    r.witness = std::move(w);
    r.witness_N = 1;
    if (!poly_divides(mero.b.poly(), r.b.poly())) {
      throw MathError("b_mero " + mero.b.to_string() + " does not divide b_simple candidate " + r.b.to_string());
    }
    r.status = mero.status;
    r.notes.push_back("minimal degree within operator degree " + std::to_string(opts.bounds.deg));
    return r;
  }
  throw CapabilityError("no b_simple of degree <= " + std::to_string(start + 4) + " within operator degree " +
                        std::to_string(opts.bounds.deg));
}

std::optional<std::pair<std::int64_t, std::int64_t>> quasi_degrees(const MultiPoly& F, const MultiPoly& G,
                                                                   const std::vector<std::int64_t>& w) {
  const auto coords = common_coordinates({F, G});
  if (w.size() != coords.size()) {
    throw std::invalid_argument("expected " + std::to_string(coords.size()) + " weights");
  }
  const auto degree_of = [&](const MultiPoly& P) -> std::optional<std::int64_t> {
    const auto p = P.with_variables(coords);
    std::optional<std::int64_t> d;
    for (const auto& [e, c] : p.terms()) {
      std::int64_t wd = 0;
      for (std::size_t i = 0; i < e.size(); ++i) wd += w[i] * static_cast<std::int64_t>(e[i]);
      if (d && *d != wd) return std::nullopt;
      d = wd;
    }
    return d;
  };
  const auto d1 = degree_of(F), d2 = degree_of(G);
  if (!d1 || !d2) return std::nullopt;
  return std::pair{*d1, *d2};
}

bool is_quasi_homogeneous(const MultiPoly& F, const MultiPoly& G, const std::vector<std::int64_t>& w,
                          std::int64_t d1, std::int64_t d2) {
  const auto d = quasi_degrees(F, G, w);
  return d && d->first == d1 && d->second == d2;
}

bool smoothness_test(const MultiPoly& F, const MultiPoly& G) {
  auto vars = common_coordinates({F, G});
  const auto f = F.with_variables(vars), g = G.with_variables(vars);
  auto rvars = vars;
  rvars.push_back("z_");
  const auto R = Signature::commutative(rvars);
  LeftIdeal I{R, {}};
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const auto h = f.derivative(i) * g - f * g.derivative(i);
    if (!h.is_zero()) I.generators.push_back(WeylElement::from_poly(R, h));
  }
  I.generators.push_back(WeylElement::constant(R, 1) -
                         WeylElement::generator(R, "z_") * WeylElement::from_poly(R, g));
  return groebner_left(I, MonomialOrder::degrevlex(R)).contains_one();
}

MeroResult reduced_b(const MultiPoly& F, const MultiPoly& G, const std::vector<std::int64_t>& w,
                     std::int64_t d1, std::int64_t d2, const MeroOptions& opts) {
  require_input(F, G);
  if (d1 == d2) throw MathError("quasi-homogeneous degrees must differ (d1 - d2 != 0)");
  if (!is_quasi_homogeneous(F, G, w, d1, d2)) {
    throw MathError("f is not quasi-homogeneous for the given weights and degrees");
  }
  MeroResult r;
  if (smoothness_test(F, G)) {
    r.b = BFunction::from_poly(UniPoly::linear_root(-1));
    r.status = Certification::Certified;
    r.notes.push_back("smooth outside G = 0");
    return r;
  }
  const unsigned deg = opts.bounds.deg;
  // Q absorbs G^e, so small e keep Q within the operator degree bound.
  for (unsigned K = 1; K <= deg; ++K) {
    for (unsigned e = 0; e <= 2; ++e) {
      EquationSearch q;
      q.F = F;
      q.G = G;
      q.N = 1;
      q.op_degree = deg;
      q.s_degree = 0;
      q.g_multiplier = e;
      q.b_degree = K;
      auto wit = search_functional_equation(q);
      if (!wit) continue;
      r.b = BFunction::from_poly(wit->b);
      if (r.b.poly().evaluate(-1) != 0) throw MathError("reduced b-function candidate lacks the root -1");
      r.witness = std::move(wit);
      r.witness_N = 1;
      r.status = Certification::Certified;
      r.notes.push_back("minimal degree within operator degree " + std::to_string(deg));
      return r;
    }
  }
  throw CapabilityError("no reduced b-function of degree <= " + std::to_string(deg) + " within the bounds");
}

}  // namespace mbfun
