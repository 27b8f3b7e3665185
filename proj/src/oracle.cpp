#include "mbfun/oracle.hpp"

#include <map>
#include <stdexcept>

#include "mbfun/linsolve.hpp"

namespace mbfun {

namespace {

struct Column {
  std::size_t k;  // 0 for an unknown coefficient of b
  Exponent alpha, beta;
  unsigned j;
};

LaurentSection lhs_base(const LaurentContext& ctx, unsigned e, unsigned m) {
  return make_section(ctx, ctx.G_pow(e), 0, static_cast<int>(m), 0);
}

LaurentSection rhs_base(const LaurentContext& ctx, unsigned m, unsigned k) {
  return make_section(ctx, MultiPoly::constant(ctx.variables(), 1), 0, static_cast<int>(m), k);
}

LaurentSection times_b(const LaurentContext& ctx, const UniPoly& b, LaurentSection v) {
  v.numerator *= b.to_multipoly("s").with_variables(ctx.variables());
  return v;
}

bool holds(const LaurentContext& ctx, const EquationWitness& w, unsigned m) {
  LaurentSection rhs = make_section(ctx, MultiPoly(ctx.variables()), 0, 0, 0);
  for (std::size_t k = 0; k < w.operators.size(); ++k) {
    if (w.operators[k].is_zero()) continue;
    rhs = add_sections(ctx, rhs, apply_operator(ctx, w.operators[k], rhs_base(ctx, m, static_cast<unsigned>(k + 1))));
  }
  return sections_equal(ctx, times_b(ctx, w.b, lhs_base(ctx, w.g_multiplier, m)), rhs);
}

}  // namespace

std::optional<EquationWitness> search_functional_equation(const EquationSearch& q) {
  if (q.N == 0) throw std::invalid_argument("N must be positive");
  if (q.b && q.b->is_zero()) throw std::invalid_argument("b must be nonzero");
  const LaurentContext ctx(q.F, q.G);
  const std::size_t n = ctx.coordinates().size();

  // d^beta (f^{s+k}/G^m) for k = 1..N, all brought to one denominator together
  // with the left-hand side.
  std::vector<DerivativeTable> tables;
  for (unsigned k = 1; k <= q.N; ++k) tables.emplace_back(ctx, rhs_base(ctx, q.m, k), q.op_degree);
  std::vector<LaurentSection> all{lhs_base(ctx, q.g_multiplier, q.m)};
  std::vector<std::pair<std::size_t, Exponent>> keys;
  for (std::size_t k = 0; k < tables.size(); ++k) {
    for (const auto& beta : tables[k].exponents()) {
      all.push_back(tables[k].get(beta));
      keys.emplace_back(k + 1, beta);
    }
  }
  all = common_form(ctx, std::move(all));
  const LaurentSection& lhs = all.front();

  std::vector<Column> cols;
  std::vector<const MultiPoly*> col_base;
  const unsigned unknown_b = q.b ? 0 : q.b_degree;
  for (unsigned j = 0; j < unknown_b; ++j) {
    cols.push_back({0, {}, {}, j});
    col_base.push_back(&lhs.numerator);
  }
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const auto& [k, beta] = keys[i];
    unsigned bdeg = 0;
    for (auto e : beta) bdeg += e;
    for (const auto& alpha : exponents_up_to(n, q.op_degree - bdeg)) {
      for (unsigned j = 0; j <= q.s_degree; ++j) {
        cols.push_back({k, alpha, beta, j});
        col_base.push_back(&all[i + 1].numerator);
      }
    }
  }

  // Rows: coefficients of x^a s^j in  sum cols - (unknown part of b) L = (known part of b) L.
  std::map<Exponent, SparseRow> rows;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    Exponent shift(n + 1, 0);
    for (std::size_t i = 0; i < cols[c].alpha.size(); ++i) shift[i] = cols[c].alpha[i];
    shift[n] = cols[c].j;
    const Rational sign = cols[c].k == 0 ? Rational(-1) : Rational(1);
    const MultiPoly term = col_base[c]->shifted(shift);
    for (const auto& [e, v] : term.terms()) rows[e][c] += sign * v;
  }
  const UniPoly known = q.b ? *q.b : UniPoly::monomial(q.b_degree);
  const MultiPoly rhs = lhs.numerator * known.to_multipoly("s").with_variables(ctx.variables());

  LinearSystem sys(cols.size());
  for (auto& [e, row] : rows) sys.add_equation(std::move(row), rhs.coefficient(e));
  for (const auto& [e, v] : rhs.terms()) {
    if (!rows.count(e)) sys.add_equation({}, v);
  }
  const auto sol = sys.solve();
  if (!sol) return std::nullopt;

  EquationWitness w;
  w.g_multiplier = q.g_multiplier;
  w.b = known;
  const auto& ops = ctx.operator_algebra();
  w.operators.assign(q.N, WeylElement(ops));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Rational& v = (*sol)[c];
    if (v == 0) continue;
    if (cols[c].k == 0) {
      w.b += UniPoly::monomial(cols[c].j, v);
      continue;
    }
    Monomial mono{};
    for (std::size_t i = 0; i < n; ++i) {
      mono[i] = static_cast<std::uint16_t>(cols[c].alpha[i]);
      mono[n + i] = static_cast<std::uint16_t>(cols[c].beta[i]);
    }
    mono[2 * n] = static_cast<std::uint16_t>(cols[c].j);
    w.operators[cols[c].k - 1].add_term(mono, v);
  }
  if (!holds(ctx, w, q.m)) throw std::logic_error("oracle solution failed exact verification");
  return w;
}

std::optional<EquationWitness> verify_functional_equation(const BFunction& b, const MultiPoly& F,
                                                          const MultiPoly& G, unsigned m,
                                                          unsigned N, unsigned deg) {
  EquationSearch q;
  q.F = F;
  q.G = G;
  q.m = m;
  q.N = N;
  q.op_degree = deg;
  q.s_degree = deg;
  q.b = b.poly();
  return search_functional_equation(q);
}

bool check_witness(const EquationWitness& w, const MultiPoly& F, const MultiPoly& G, unsigned m) {
  const LaurentContext ctx(F, G);
  for (const auto& P : w.operators) {
    if (!same_signature(P.signature(), ctx.operator_algebra())) return false;
  }
  return holds(ctx, w, m);
}

}  // namespace mbfun
