#pragma once

// Derived holomorphic discrete series on the tube domain,
//   dpi_m(X) = -m (r/n) Tr DX(z) - sum_a X(z)^a d_{z^a},
// and its identification with the star representation.

#include <optional>
#include <string>
#include <vector>

#include "jstar/starrep.hpp"

namespace jstar {

/// X(z) = u + Tz + P(z)v with DX(z) = T + 2 z box v.
struct TubeField {
  std::vector<Poly> X;
  Matrix<Poly> DX;
  Poly trace_DX;
};

inline TubeField tube_field(const GradedLieAlgebra& g, const VarSetPtr& zv, const std::vector<Rational>& A) {
  const auto& J = g.jordan;
  const LieElement e = to_element(g, A);
  JordanVector<Poly> z(g.n), u(g.n), v(g.n);
  for (std::size_t a = 0; a < g.n; ++a) {
    z[a] = Poly::variable(zv, a);
    u[a] = Poly::constant(zv, Scalar(e.u[a]));
    v[a] = Poly::constant(zv, Scalar(e.v[a]));
  }
  const Matrix<Poly> T = convert<Poly>(e.T);
  TubeField f;
  f.X = T.apply(z);
  const auto Pv = quadratic_rep(J, z).apply(v);
  for (std::size_t a = 0; a < g.n; ++a) f.X[a] = (f.X[a] + u[a] + Pv[a]).lifted(zv);
  f.DX = T + box_operator(J, z, v).scaled(Rational(2));
  f.trace_DX = f.DX.trace().lifted(zv);
  return f;
}

/// dpi_m = S0 + m S1 with S0 = -X^a d_a and S1 = -(r/n) Tr DX.
struct HdsOperator {
  WeylOperator S0;
  WeylOperator S1;

  WeylOperator at(const Scalar& m) const { return S0 + S1 * m; }
};

inline HdsOperator dpi(const GradedLieAlgebra& g, const VarSetPtr& zv, const std::vector<Rational>& A) {
  const TubeField f = tube_field(g, zv, A);
  HdsOperator op{WeylOperator(zv), WeylOperator(zv)};
  for (std::size_t a = 0; a < g.n; ++a)
    op.S0 -= WeylOperator::multiplication(f.X[a]) * WeylOperator::derivative(zv, a);
  const Rational rn(static_cast<long>(g.jordan.rank), static_cast<long>(g.n));
  op.S1 = WeylOperator::multiplication(f.trace_DX * (-rn));
  return op;
}

/// [dpi_m(X), dpi_m(Y)] = sign dpi_m([X, Y]) identically in m.
inline HomomorphismResult verify_dpi_homomorphism(const GradedLieAlgebra& g, const VarSetPtr& zv) {
  std::vector<HdsOperator> ops;
  for (std::size_t i = 0; i < g.dim; ++i) ops.push_back(dpi(g, zv, basis_coords(g, i)));
  HomomorphismResult res;
  bool hom = true, anti = true;
  for (std::size_t i = 0; i < g.dim && (hom || anti); ++i)
    for (std::size_t j = i; j < g.dim && (hom || anti); ++j) {
      const auto& X = ops[i];
      const auto& Y = ops[j];
      // coefficients of m^0, m^1, m^2
      const WeylOperator c0 = commutator(X.S0, Y.S0);
      const WeylOperator c1 = commutator(X.S0, Y.S1) + commutator(X.S1, Y.S0);
      const WeylOperator c2 = commutator(X.S1, Y.S1);
      HdsOperator br{WeylOperator(zv), WeylOperator(zv)};
      for (const auto& [k, c] : g.structure(i, j)) {
        br.S0 += ops[k].S0 * Scalar(c);
        br.S1 += ops[k].S1 * Scalar(c);
      }
      const bool h = c0 == br.S0 && c1 == br.S1 && c2.is_zero();
      const bool a = c0 == -br.S0 && c1 == -br.S1 && c2.is_zero();
      if (hom && !h && res.detail.empty())
        res.detail = "(" + g.basis_name(i) + "," + g.basis_name(j) + "): m^0 residual " + (c0 - br.S0).str() +
                     ", m^1 residual " + (c1 - br.S1).str();
      hom = hom && h;
      anti = anti && a;
    }
  res.sign = hom ? 1 : (anti ? -1 : 0);
  if (res.sign != 0) res.detail.clear();
  return res;
}

/// l_A(z) = X(z), Tr DX = Tr T + 2 tau(z, v) and D(X(z)) = DX(z) for every basis element.
inline CheckList verify_tube_identities(const StarRepresentation& s) {
  const auto& g = *s.g;
  CheckList checks;
  std::string field, trace, jac;
  JordanVector<Poly> z(g.n);
  for (std::size_t a = 0; a < g.n; ++a) z[a] = Poly::variable(s.zvars, a);
  for (std::size_t i = 0; i < g.dim; ++i) {
    const auto A = basis_coords(g, i);
    const TubeField f = tube_field(g, s.zvars, A);
    for (std::size_t a = 0; a < g.n && field.empty(); ++a)
      if (!(f.X[a] == s.l[i][a]))
        field = g.basis_name(i) + " component " + std::to_string(a) + ": l_A = " + s.l[i][a].str() + ", X(z) = " +
                f.X[a].str();

    const LieElement e = to_element(g, A);
    JordanVector<Poly> v(g.n);
    for (std::size_t a = 0; a < g.n; ++a) v[a] = Poly::constant(s.zvars, Scalar(e.v[a]));
    const Poly expected = Poly::constant(s.zvars, Scalar(e.T.trace())) + tau_form(g.jordan, z, v) * Rational(2);
    if (trace.empty() && !(expected == f.trace_DX)) trace = g.basis_name(i) + ": " + f.trace_DX.str();

    for (std::size_t r = 0; r < g.n && jac.empty(); ++r)
      for (std::size_t c = 0; c < g.n && jac.empty(); ++c)
        if (!(f.X[r].diff(c) == f.DX(r, c))) jac = g.basis_name(i) + " entry (" + std::to_string(r) + "," + std::to_string(c) + ")";
  }
  checks.add("vector_field_equals_tube_field", field.empty(), field);
  checks.add("trace_DX_formula", trace.empty(), trace);
  checks.add("DX_is_jacobian", jac.empty(), jac);
  return checks;
}

// ---------------------------------------------------------------------------
// Equivalence

enum class Alpha { plus_id, minus_id, plus_theta, minus_theta };

inline std::string alpha_name(Alpha a) {
  switch (a) {
    case Alpha::plus_id: return "+id";
    case Alpha::minus_id: return "-id";
    case Alpha::plus_theta: return "+theta";
    case Alpha::minus_theta: return "-theta";
  }
  return {};
}

inline std::vector<Rational> apply_alpha(const GradedLieAlgebra& g, Alpha a, const std::vector<Rational>& x) {
  std::vector<Rational> y = (a == Alpha::plus_theta || a == Alpha::minus_theta) ? to_coords(g, theta(g, to_element(g, x))) : x;
  if (a == Alpha::minus_id || a == Alpha::minus_theta)
    for (auto& c : y) c = -c;
  return y;
}

struct Equivalence {
  bool found = false;
  Alpha alpha = Alpha::plus_id;
  Scalar m_star;
  std::string residual;                       // empty on success
  std::vector<std::string> candidate_notes;  // one line per candidate tried
};

namespace detail {

inline WeylOperator scalar_part(const WeylOperator& D) {
  WeylOperator r(D.varset());
  r.add(Exponents(D.nvars(), 0), D.coefficient(Exponents(D.nvars(), 0)));
  return r;
}
inline WeylOperator vector_part(const WeylOperator& D) { return D - scalar_part(D); }

}  // namespace detail

/// Searches alpha in {+id, -id, +theta, -theta} and one m* with
/// rho(A) = dpi_{m*}(alpha A) for all basis elements. `rho` is indexed by
/// basis element; it is a parameter so that callers can perturb it.
inline Equivalence solve_equivalence(const GradedLieAlgebra& g, const std::vector<WeylOperator>& rho,
                                     const VarSetPtr& zv) {
  Equivalence best;
  for (Alpha alpha : {Alpha::plus_id, Alpha::minus_id, Alpha::plus_theta, Alpha::minus_theta}) {
    std::vector<HdsOperator> ops;
    std::string why;
    for (std::size_t i = 0; i < g.dim && why.empty(); ++i) {
      ops.push_back(dpi(g, zv, apply_alpha(g, alpha, basis_coords(g, i))));
      const WeylOperator diff = detail::vector_part(rho[i]) - ops.back().S0;
      if (!diff.is_zero()) why = "vector part differs at " + g.basis_name(i) + ": " + diff.str();
    }
    if (!why.empty()) {
      best.candidate_notes.push_back(alpha_name(alpha) + ": " + why);
      if (best.residual.empty()) best.residual = alpha_name(alpha) + ": " + why;
      continue;
    }

    // Scalar parts: tau_A = m * S1(alpha A).
    std::optional<Scalar> m;
    for (std::size_t i = 0; i < g.dim && !m && why.empty(); ++i) {
      const Poly s1 = ops[i].S1.coefficient(Exponents(g.n, 0));
      if (s1.is_zero()) continue;
      const auto& [e, c] = *s1.terms().begin();
      const Scalar tau_c = rho[i].coefficient(Exponents(g.n, 0)).coefficient(e);
      try {
        m = tau_c.div_exact(c);
      } catch (const NotDivisible&) {
        why = "scalar part of " + g.basis_name(i) + " is not a multiple of Tr DX";
      }
    }
    if (!m && why.empty()) why = "Tr DX vanishes on every basis element";
    for (std::size_t i = 0; i < g.dim && why.empty(); ++i) {
      const WeylOperator diff = detail::scalar_part(rho[i]) - ops[i].S1 * *m;
      if (!diff.is_zero()) why = "scalar part residual at " + g.basis_name(i) + ": " + diff.str();
    }
    if (why.empty()) {
      best.found = true;
      best.alpha = alpha;
      best.m_star = *m;
      best.residual.clear();
      best.candidate_notes.push_back(alpha_name(alpha) + ": m* = " + m->str());
      return best;
    }
    best.candidate_notes.push_back(alpha_name(alpha) + ": " + why);
    best.residual = alpha_name(alpha) + ": " + why;
  }
  return best;
}

/// Throwing variant.
inline Equivalence solve_equivalence_or_throw(const GradedLieAlgebra& g, const std::vector<WeylOperator>& rho,
                                              const VarSetPtr& zv) {
  Equivalence e = solve_equivalence(g, rho, zv);
  if (!e.found) throw NoEquivalence(e.residual);
  return e;
}

/// (beta(o,o) + n nu c) / (4 nu r c).
inline Scalar m_formula(const GradedLieAlgebra& g) {
  const Rational boo = killing_intrinsic(g, g.o, g.o);
  const Rational n(static_cast<long>(g.n));
  const Rational r(static_cast<long>(g.jordan.rank));
  Scalar num(boo);
  num += Scalar::nu(1) * Scalar(n * g.c);
  return num * Scalar::monomial(GaussianRational(Rational(1) / (Rational(4) * r * g.c)), -1);
}

struct TheoremComparison {
  Scalar m_star;
  Scalar m_formula;
  std::string match;  // exact | proportional | failed
  std::optional<Rational> factor;            // m* / m_formula when constant
  std::optional<Rational> predicted_factor;  // -2 s_alpha kappa_h for alpha = s id
  bool factor_traced = false;
};

/// With h_A = kappa_h DX_A and beta(T, o) = 2c tr T on g_0, the scalar part of
/// rho(A) is kappa_h (beta(o,o) + n nu c)/(2 nu n c) Tr DX_A, while
/// dpi_m(s A) has scalar part -s m (r/n) Tr DX_A; hence
/// m* = -2 s kappa_h m_formula.
inline TheoremComparison compare_with_theorem(const GradedLieAlgebra& g, const Equivalence& eq, const KappaH& kh) {
  TheoremComparison t;
  t.m_star = eq.m_star;
  t.m_formula = m_formula(g);
  if (eq.found && kh.defined && (eq.alpha == Alpha::plus_id || eq.alpha == Alpha::minus_id)) {
    const Rational s(eq.alpha == Alpha::plus_id ? 1 : -1);
    t.predicted_factor = Rational(-2) * s * kh.value;
  }
  if (!eq.found) {
    t.match = "failed";
    return t;
  }
  if (t.m_star == t.m_formula) {
    t.match = "exact";
    t.factor = Rational(1);
  } else {
    try {
      const Scalar q = t.m_star.div_exact(t.m_formula);
      if (q.is_constant() && q.as_constant().is_real() && !q.is_zero()) {
        t.match = "proportional";
        t.factor = q.as_constant().re();
      } else {
        t.match = "failed";
      }
    } catch (const NotDivisible&) {
      t.match = "failed";
    }
  }
  t.factor_traced = t.factor && t.predicted_factor && *t.factor == *t.predicted_factor;
  if (t.match == "proportional" && !t.factor_traced) t.match = "failed";
  return t;
}

struct RemarkReport {
  Rational nu0;                // -beta(o,o)/(n c)
  Rational numerator_at_nu0;   // beta(o,o) + n nu0 c
  GaussianRational m_star_at_nu0;
  GaussianRational m_formula_at_nu0;
  GaussianRational tau_E_at_nu0;  // constant term of the scalar part of rho(E)
};

inline RemarkReport remark_substitution(const GradedLieAlgebra& g, const Equivalence& eq,
                                        const std::vector<WeylOperator>& rho) {
  RemarkReport r;
  const Rational boo = killing_intrinsic(g, g.o, g.o);
  const Rational n(static_cast<long>(g.n));
  r.nu0 = -boo / (n * g.c);
  r.numerator_at_nu0 = boo + n * r.nu0 * g.c;
  r.m_star_at_nu0 = eq.m_star.evaluate(r.nu0);
  r.m_formula_at_nu0 = m_formula(g).evaluate(r.nu0);
  // rho of the grading element, by linearity
  Scalar tauE;
  for (std::size_t i = 0; i < g.dim; ++i)
    if (!g.grading_element[i].is_zero())
      tauE += rho[i].coefficient(Exponents(g.n, 0)).constant_term() * Scalar(g.grading_element[i]);
  r.tau_E_at_nu0 = tauE.evaluate(r.nu0);
  return r;
}

}  // namespace jstar
