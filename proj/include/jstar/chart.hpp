#pragma once

// Darboux chart phi(l, l') = Ad(exp l exp l') o as a polynomial map into g,
// the moment maps lambda_A = beta(phi, A) and the Poisson bracket on q.

#include <memory>
#include <string>
#include <vector>

#include "jstar/checks.hpp"
#include "jstar/kkt.hpp"
#include "jstar/mpoly.hpp"

namespace jstar {

/// Variables l1..ln (coordinates along L_a) then lp1..lpn (along L'_a).
inline VarSetPtr chart_varset(std::size_t n) {
  auto names = VarSet::indexed("l", n);
  for (auto& s : VarSet::indexed("lp", n)) names.push_back(s);
  return make_varset(std::move(names));
}

struct ChartContext {
  std::shared_ptr<const GradedLieAlgebra> g;
  SymplecticChartBasis basis;
  VarSetPtr vars;
  std::vector<Poly> phi;     // g-coordinates of phi(l, l')
  std::vector<Poly> lambda;  // lambda_i for each basis element X_i

  std::size_t n() const { return g->n; }
};

/// exp(ad y) x as a terminating series.
inline std::vector<Poly> exp_ad(const GradedLieAlgebra& g, const std::vector<Poly>& y, std::vector<Poly> x) {
  std::vector<Poly> total = x;
  Rational factorial(1);
  for (long k = 1;; ++k) {
    x = bracket_coords(g, y, x);
    bool zero = true;
    for (const auto& p : x) zero = zero && p.is_zero();
    if (zero) break;
    if (k > static_cast<long>(2 * g.dim + 2)) throw ValidationFailed("ad is not nilpotent on the chart series");
    factorial *= Rational(k);
    const Rational inv = Rational(1) / factorial;
    for (std::size_t i = 0; i < g.dim; ++i) total[i] += x[i] * inv;
  }
  return total;
}

inline ChartContext build_chart(std::shared_ptr<const GradedLieAlgebra> g, const SymplecticChartBasis& basis) {
  ChartContext ctx;
  ctx.g = g;
  ctx.basis = basis;
  const std::size_t n = g->n;
  ctx.vars = chart_varset(n);

  std::vector<Poly> l(g->dim, Poly(ctx.vars)), lp(g->dim, Poly(ctx.vars)), o(g->dim, Poly(ctx.vars));
  for (std::size_t a = 0; a < n; ++a) {
    const Poly la = Poly::variable(ctx.vars, a);
    const Poly lpa = Poly::variable(ctx.vars, n + a);
    for (std::size_t i = 0; i < g->dim; ++i) {
      if (!basis.L[a][i].is_zero()) l[i] += la * basis.L[a][i];
      if (!basis.Lp[a][i].is_zero()) lp[i] += lpa * basis.Lp[a][i];
    }
  }
  for (std::size_t i = 0; i < g->dim; ++i) o[i] = Poly::constant(ctx.vars, Scalar(g->o[i]));

  ctx.phi = exp_ad(*g, l, exp_ad(*g, lp, o));
  ctx.lambda.resize(g->dim);
  for (std::size_t i = 0; i < g->dim; ++i) {
    std::vector<Poly> A(g->dim, Poly(ctx.vars));
    A[i] = Poly::constant(ctx.vars, Scalar(1));
    ctx.lambda[i] = killing_intrinsic(*g, ctx.phi, A);
  }
  return ctx;
}

inline ChartContext build_chart(std::shared_ptr<const GradedLieAlgebra> g) {
  const auto basis = symplectic_basis(*g);
  return build_chart(std::move(g), basis);
}

/// lambda_A for A given in g-coordinates.
inline Poly moment_map(const ChartContext& ctx, const std::vector<Rational>& A) {
  Poly p(ctx.vars);
  for (std::size_t i = 0; i < A.size(); ++i)
    if (!A[i].is_zero()) p += ctx.lambda[i] * A[i];
  return p;
}

/// {p, q} = sum_a dp/dl^a dq/dl'^a - dp/dl'^a dq/dl^a.
inline Poly poisson(const Poly& p, const Poly& q) {
  const VarSetPtr& vs = p.varset() ? p.varset() : q.varset();
  if (!vs) return Poly();
  if (p.varset() && q.varset() && !(*p.varset() == *q.varset()))
    throw VarSetMismatch("poisson bracket of polynomials over different variable sets");
  if (vs->size() % 2 != 0) throw InvalidDimension("Poisson bracket needs an even number of variables");
  const std::size_t n = vs->size() / 2;
  const Poly lp = p.lifted(vs), lq = q.lifted(vs);
  Poly r(vs);
  for (std::size_t a = 0; a < n; ++a) r += lp.diff(a) * lq.diff(n + a) - lp.diff(n + a) * lq.diff(a);
  return r;
}

struct ChartReport {
  CheckList checks;
  int max_degree = 0;
};

inline ChartReport verify_strongly_hamiltonian(const ChartContext& ctx) {
  ChartReport rep;
  const auto& g = *ctx.g;
  const std::size_t n = g.n;
  std::vector<std::size_t> l_vars, lp_vars;
  for (std::size_t a = 0; a < n; ++a) {
    l_vars.push_back(a);
    lp_vars.push_back(n + a);
  }

  std::string detail;
  for (std::size_t i = 0; i < g.dim && detail.empty(); ++i)
    if (!(ctx.phi[i].constant_term() == Scalar(g.o[i]))) detail = "phi(0,0) differs from o at " + g.basis_name(i);
  for (std::size_t i = 0; i < g.dim && detail.empty(); ++i)
    if (ctx.phi[i].degree_in(l_vars) > 2 || ctx.phi[i].degree_in(lp_vars) > 1)
      detail = "phi component " + g.basis_name(i) + " exceeds degree (2, 1): " + ctx.phi[i].str();
  rep.checks.add("chart_shape", detail.empty(), detail);

  detail.clear();
  for (std::size_t i = 0; i < g.dim; ++i) {
    const Poly& lam = ctx.lambda[i];
    rep.max_degree = std::max(rep.max_degree, lam.degree());
    if (detail.empty() && (lam.degree() > 3 || lam.degree_in(l_vars) > 2 || lam.degree_in(lp_vars) > 1))
      detail = "lambda_" + g.basis_name(i) + " = " + lam.str();
  }
  rep.checks.add("moment_map_degree", detail.empty(), detail.empty() ? "max degree " + std::to_string(rep.max_degree) : detail);

  const Scalar boo(killing_intrinsic(g, g.o, g.o));
  const Poly lam_o = moment_map(ctx, g.o);
  rep.checks.add("lambda_o_at_origin", lam_o.constant_term() == boo,
                 "lambda_o(0,0) = " + lam_o.constant_term().str() + ", beta(o,o) = " + boo.str());

  detail.clear();
  for (std::size_t i = 0; i < g.dim && detail.empty(); ++i)
    for (std::size_t j = i + 1; j < g.dim && detail.empty(); ++j) {
      Poly residual = poisson(ctx.lambda[i], ctx.lambda[j]);
      for (const auto& [k, ck] : g.structure(i, j)) residual -= ctx.lambda[k] * ck;
      if (!residual.is_zero())
        detail = "(" + g.basis_name(i) + "," + g.basis_name(j) + "): " + residual.str();
    }
  rep.checks.add("poisson_homomorphism", detail.empty(), detail);
  return rep;
}

}  // namespace jstar
