#pragma once

// Star-product checks on the moment maps and the holomorphic star
// representation rho^(A) = tau_A + sum_a l_A^a d_{z^a}.

#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "jstar/chart.hpp"
#include "jstar/checks.hpp"
#include "jstar/weyl.hpp"

namespace jstar {

// ---------------------------------------------------------------------------
// Star product suite

/// Random polynomial of total degree <= max_degree with small integer
/// coefficients; roughly `density` of the admissible monomials are present.
inline Poly random_poly(const VarSetPtr& vars, int max_degree, std::mt19937& rng, double density = 0.3) {
  std::uniform_int_distribution<long> coeff(-3, 3);
  std::bernoulli_distribution keep(density);
  Poly p(vars);
  const std::size_t n = vars->size();
  Exponents e(n, 0);
  // enumerate all exponent vectors of total degree <= max_degree
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == n) {
      if (keep(rng)) p.add_term(e, Scalar(coeff(rng)));
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[i] = static_cast<std::uint8_t>(k);
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, max_degree);
  return p;
}

/// Coefficient of nu^k in every term.
inline Poly nu_coefficient(const Poly& p, int k) {
  return p.map_coefficients([k](const Scalar& s) { return Scalar::monomial(s.coefficient(k), 0); });
}

/// Drops nu^j for j >= k.
inline Poly truncate_nu(const Poly& p, int k) {
  return p.map_coefficients([k](const Scalar& s) {
    Scalar r;
    for (const auto& [e, c] : s.terms())
      if (e < k) r.add_term(e, c);
    return r;
  });
}

struct StarReport {
  CheckList checks;
  int N = -1;
  int associativity_trials = 0;
};

inline StarReport verify_star_suite(const ChartContext& ctx, int trials = 20, unsigned seed = 20240611u) {
  StarReport rep;
  const auto& g = *ctx.g;
  const VarSetPtr& vs = ctx.vars;
  std::mt19937 rng(seed);
  const Poly one = Poly::constant(vs, Scalar(1));

  // Deformation conditions on the moment maps and on random polynomials.
  std::vector<Poly> samples = ctx.lambda;
  for (int t = 0; t < 4; ++t) samples.push_back(random_poly(vs, 3, rng));
  std::string detail;
  for (std::size_t i = 0; i < samples.size() && detail.empty(); ++i) {
    const Poly& u = samples[i];
    if (!(moyal_star(u, one) == u) || !(moyal_star(one, u) == u)) detail = "unit fails on sample " + std::to_string(i);
  }
  rep.checks.add("star_unit", detail.empty(), detail);

  detail.clear();
  for (std::size_t i = 0; i < samples.size() && detail.empty(); ++i)
    for (std::size_t j = 0; j < samples.size() && detail.empty(); ++j) {
      const Poly& u = samples[i];
      const Poly& v = samples[j];
      const Poly uv = moyal_star(u, v);
      const Poly vu = moyal_star(v, u);
      if (!(truncate_nu(uv, 1) == u * v)) detail = "(u*v) mod nu != uv on (" + std::to_string(i) + "," + std::to_string(j) + ")";
      else if (!(truncate_nu(uv - vu, 2) == poisson(u, v) * Scalar(Rational(2)) * Scalar::nu(1)))
        detail = "(u*v - v*u) mod nu^2 != 2 nu {u,v} on (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
  rep.checks.add("star_deformation", detail.empty(), detail);

  detail.clear();
  for (int t = 0; t < trials && detail.empty(); ++t) {
    const Poly p = random_poly(vs, 3, rng, 0.15), q = random_poly(vs, 3, rng, 0.15), r = random_poly(vs, 3, rng, 0.15);
    const Poly lhs = moyal_star(moyal_star(p, q), r);
    const Poly rhs = moyal_star(p, moyal_star(q, r));
    ++rep.associativity_trials;
    if (!(lhs == rhs)) detail = "trial " + std::to_string(t) + ": residual " + (lhs - rhs).str();
  }
  rep.checks.add("star_associativity", detail.empty(),
                 detail.empty() ? std::to_string(rep.associativity_trials) + " trials" : detail);

  // Covariance lambda_A * lambda_B - lambda_B * lambda_A = 2 nu {lambda_A, lambda_B}.
  detail.clear();
  for (std::size_t i = 0; i < g.dim && detail.empty(); ++i)
    for (std::size_t j = i + 1; j < g.dim && detail.empty(); ++j) {
      const Poly lhs = moyal_star(ctx.lambda[i], ctx.lambda[j]) - moyal_star(ctx.lambda[j], ctx.lambda[i]);
      Poly residual = lhs - poisson(ctx.lambda[i], ctx.lambda[j]) * Scalar(Rational(2)) * Scalar::nu(1);
      if (!residual.is_zero()) detail = "(" + g.basis_name(i) + "," + g.basis_name(j) + "): " + residual.str();
      else if (!nu_coefficient(lhs, 3).is_zero())
        detail = "(" + g.basis_name(i) + "," + g.basis_name(j) + "): nu^3 term survives";
    }
  rep.checks.add("covariance", detail.empty(), detail);

  // Left multiplication by lambda_A is a differential operator
  // of order N independent of the argument.
  detail.clear();
  for (std::size_t i = 0; i < g.dim; ++i) {
    const WeylOperator D = left_star_operator(ctx.lambda[i], vs);
    rep.N = std::max(rep.N, D.order());
    if (detail.empty() && D.order() > ctx.lambda[i].degree())
      detail = "operator order exceeds degree for " + g.basis_name(i);
    if (detail.empty())
      for (int t = 0; t < 2; ++t) {
        const Poly f = random_poly(vs, 4, rng, 0.2);
        if (!(D.apply(f) == moyal_star(ctx.lambda[i], f))) {
          detail = "left-star operator disagrees with the product for " + g.basis_name(i);
          break;
        }
      }
  }
  rep.checks.add("finite_order_operators", detail.empty() && rep.N == 3,
                 detail.empty() ? "N = " + std::to_string(rep.N) : detail);
  return rep;
}

// ---------------------------------------------------------------------------
// Holomorphic star representation

inline VarSetPtr z_varset(std::size_t n) { return make_varset(VarSet::indexed("z", n)); }

struct StarRepresentation {
  std::shared_ptr<const GradedLieAlgebra> g;
  SymplecticChartBasis basis;
  VarSetPtr zvars;
  std::vector<std::vector<Poly>> h;  // h_A in g-coordinates (only g_0 entries)
  std::vector<std::vector<Poly>> l;  // l_A in Jordan coordinates
  std::vector<Poly> tau;
  std::vector<WeylOperator> rho;
};

namespace detail {

inline std::vector<Poly> lift(const std::vector<Rational>& x, const VarSetPtr& vs) {
  std::vector<Poly> out(x.size(), Poly(vs));
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out[i] = Poly::constant(vs, Scalar(x[i]));
  return out;
}

inline std::vector<Poly> symbolic_z(const GradedLieAlgebra& g, const SymplecticChartBasis& basis, const VarSetPtr& vs) {
  std::vector<Poly> z(g.dim, Poly(vs));
  for (std::size_t a = 0; a < g.n; ++a)
    for (std::size_t i = 0; i < g.dim; ++i)
      if (!basis.L[a][i].is_zero()) z[i] += Poly::variable(vs, a) * basis.L[a][i];
  return z;
}

inline std::vector<Poly> part(const GradedLieAlgebra& g, std::vector<Poly> x, Part p) {
  for (std::size_t i = 0; i < g.dim; ++i)
    if (g.part(i) != p) x[i] = Poly(x[i].varset());
  return x;
}

}  // namespace detail

/// h_A(z) = A_h + [A_l', z]_h.
inline std::vector<Poly> h_poly(const GradedLieAlgebra& g, const SymplecticChartBasis& basis, const VarSetPtr& zv,
                                const std::vector<Rational>& A) {
  const auto a = detail::lift(A, zv);
  const auto z = detail::symbolic_z(g, basis, zv);
  auto h = detail::part(g, a, Part::h);
  const auto br = detail::part(g, bracket_coords(g, detail::part(g, a, Part::lp), z), Part::h);
  for (std::size_t i = 0; i < g.dim; ++i) h[i] += br[i];
  return h;
}

/// l_A(z) = A_l + [A_h, z] + 1/2 [z, [z, A_l']], in coordinates along L_a.
inline std::vector<Poly> l_poly(const GradedLieAlgebra& g, const SymplecticChartBasis& basis, const VarSetPtr& zv,
                                const std::vector<Rational>& A) {
  const auto a = detail::lift(A, zv);
  const auto z = detail::symbolic_z(g, basis, zv);
  auto sum = detail::part(g, a, Part::l);
  const auto t1 = bracket_coords(g, detail::part(g, a, Part::h), z);
  const auto t2 = bracket_coords(g, z, bracket_coords(g, z, detail::part(g, a, Part::lp)));
  for (std::size_t i = 0; i < g.dim; ++i) sum[i] += t1[i] + t2[i] * Rational(1, 2);
  // L_a are the u_a, so l-coordinates are read off directly.
  std::vector<Poly> out(g.n, Poly(zv));
  for (std::size_t a2 = 0; a2 < g.n; ++a2) out[a2] = sum[g.l_index(a2)];
  return out;
}

/// tau_A = (1/2nu)(beta(h_A, o) + nu spur(h_A)).
inline Poly tau_scalar(const GradedLieAlgebra& g, const SymplecticChartBasis& basis, const std::vector<Poly>& hA,
                       const VarSetPtr& zv) {
  const auto o = detail::lift(g.o, zv);
  const Poly b = killing_intrinsic(g, hA, o).lifted(zv);
  const Poly s = spur(g, basis, hA).lifted(zv);
  const Scalar inv_2nu = Scalar::monomial(GaussianRational(Rational(1, 2)), -1);
  return (b + s * Scalar::nu(1)) * inv_2nu;
}

inline WeylOperator first_order_operator(const Poly& scalar, const std::vector<Poly>& field, const VarSetPtr& zv) {
  WeylOperator op = WeylOperator::multiplication(scalar.lifted(zv));
  for (std::size_t a = 0; a < field.size(); ++a)
    op += WeylOperator::multiplication(field[a].lifted(zv)) * WeylOperator::derivative(zv, a);
  return op;
}

inline StarRepresentation build_star_representation(std::shared_ptr<const GradedLieAlgebra> g,
                                                    const SymplecticChartBasis& basis) {
  StarRepresentation s;
  s.g = g;
  s.basis = basis;
  s.zvars = z_varset(g->n);
  for (std::size_t i = 0; i < g->dim; ++i) {
    const auto A = basis_coords(*g, i);
    s.h.push_back(h_poly(*g, basis, s.zvars, A));
    s.l.push_back(l_poly(*g, basis, s.zvars, A));
    s.tau.push_back(tau_scalar(*g, basis, s.h.back(), s.zvars));
    s.rho.push_back(first_order_operator(s.tau.back(), s.l.back(), s.zvars));
  }
  return s;
}

/// rho^ of an arbitrary element, by linearity.
inline WeylOperator rho_hat(const StarRepresentation& s, const std::vector<Rational>& A) {
  WeylOperator op(s.zvars);
  for (std::size_t i = 0; i < A.size(); ++i)
    if (!A[i].is_zero()) op += s.rho[i] * Scalar(A[i]);
  return op;
}

struct HomomorphismResult {
  int sign = 0;  // +1 homomorphism, -1 anti-homomorphism, 0 neither
  std::string detail;
};

/// Checks [R(A), R(B)] = sign * R([A, B]) on all basis pairs.
template <class Op>
HomomorphismResult check_homomorphism(const GradedLieAlgebra& g, Op&& op) {
  HomomorphismResult res;
  bool hom = true, anti = true;
  for (std::size_t i = 0; i < g.dim && (hom || anti); ++i)
    for (std::size_t j = i; j < g.dim && (hom || anti); ++j) {
      const WeylOperator lhs = commutator(op(basis_coords(g, i)), op(basis_coords(g, j)));
      std::vector<Rational> br(g.dim);
      for (const auto& [k, c] : g.structure(i, j)) br[k] = c;
      const WeylOperator rhs = op(br);
      if (hom && !(lhs == rhs)) {
        hom = false;
        if (res.detail.empty())
          res.detail = "(" + g.basis_name(i) + "," + g.basis_name(j) + "): residual " + (lhs - rhs).str();
      }
      if (anti && !(lhs == -rhs)) anti = false;
    }
  res.sign = hom ? 1 : (anti ? -1 : 0);
  if (res.sign != 0) res.detail.clear();
  return res;
}

inline HomomorphismResult verify_rho_homomorphism(const StarRepresentation& s) {
  return check_homomorphism(*s.g, [&](const std::vector<Rational>& A) { return rho_hat(s, A); });
}

/// h_A = kappa_h * D(l_A) for one constant kappa_h over all basis elements.
struct KappaH {
  bool defined = false;
  Rational value;
  std::string detail;
};

inline KappaH measure_kappa_h(const StarRepresentation& s) {
  const auto& g = *s.g;
  KappaH k;
  std::optional<Scalar> ratio;
  for (std::size_t i = 0; i < g.dim && k.detail.empty(); ++i) {
    // h_A as an n x n polynomial matrix
    Matrix<Poly> H(g.n, g.n);
    for (std::size_t m = 0; m < g.d0; ++m) {
      const Poly& c = s.h[i][g.h_index(m)];
      if (c.is_zero()) continue;
      for (std::size_t r = 0; r < g.n; ++r)
        for (std::size_t q = 0; q < g.n; ++q)
          if (!g.g0_basis[m](r, q).is_zero()) H(r, q) += c * g.g0_basis[m](r, q);
    }
    for (std::size_t r = 0; r < g.n && k.detail.empty(); ++r)
      for (std::size_t q = 0; q < g.n && k.detail.empty(); ++q) {
        const Poly dl = s.l[i][r].diff(q);
        const Poly& hv = H(r, q);
        if (dl.is_zero() && hv.is_zero()) continue;
        if (dl.is_zero() || hv.is_zero()) {
          k.detail = "h and Dl disagree in support for " + g.basis_name(i);
          break;
        }
        if (!ratio) {
          // leading coefficients fix the candidate
          ratio = hv.terms().begin()->second.div_exact(dl.lifted(s.zvars).terms().begin()->second);
        }
        if (!(hv == dl * *ratio)) k.detail = "h_" + g.basis_name(i) + " is not a multiple of D l_" + g.basis_name(i);
      }
  }
  if (k.detail.empty() && ratio && ratio->is_constant() && ratio->as_constant().is_real()) {
    k.defined = true;
    k.value = ratio->as_constant().re();
  } else if (k.detail.empty()) {
    k.detail = "no admissible constant";
  }
  return k;
}

// ---------------------------------------------------------------------------
// Fourier conjugated star operators versus rho^

struct FourierIdentityReport {
  CheckList checks;
  std::string literal_relation;  // exact | negated_nu_reflected | none
  bool literal_holomorphic = false;
  bool right_route_exact = false;
  bool right_route_holomorphic = false;
  bool polynomial_level_exact = false;
  std::vector<WeylOperator> literal;  // conjugated (1/2nu) left-star operators
};

/// (1/2nu) F(lambda * .) in the holomorphic frame, restricted to z.
inline WeylOperator conjugated_star_operator(const ChartContext& ctx, std::size_t i, bool left, int kernel_sign,
                                             const VarSetPtr& zv, bool* holomorphic) {
  const Scalar inv_2nu = Scalar::monomial(GaussianRational(Rational(1, 2)), -1);
  const WeylOperator star = (left ? left_star_operator(ctx.lambda[i], ctx.vars)
                                  : right_star_operator(ctx.lambda[i], ctx.vars)) * inv_2nu;
  const WeylOperator D = to_holomorphic_frame(fourier_conjugate(star, kernel_sign));
  *holomorphic = is_holomorphic(D);
  if (!*holomorphic) return D;
  return restrict_to_z(D, zv);
}

inline FourierIdentityReport verify_fourier_identity(const ChartContext& ctx, const StarRepresentation& s) {
  FourierIdentityReport rep;
  const auto& g = *ctx.g;
  bool exact = true, negated = true, holo = true;
  bool right_exact = true, right_holo = true, poly_exact = true;
  std::string detail, right_detail;

  std::vector<Poly> probes;
  {
    // monomials of degree <= 2 in z
    probes.push_back(Poly::constant(s.zvars, Scalar(1)));
    for (std::size_t a = 0; a < g.n; ++a) {
      probes.push_back(Poly::variable(s.zvars, a));
      for (std::size_t b = a; b < g.n; ++b) probes.push_back(Poly::variable(s.zvars, a) * Poly::variable(s.zvars, b));
    }
  }

  for (std::size_t i = 0; i < g.dim; ++i) {
    bool h = false;
    WeylOperator D = conjugated_star_operator(ctx, i, true, 1, s.zvars, &h);
    if (!h) {
      holo = false;
      exact = negated = poly_exact = false;
      if (detail.empty()) detail = "non-holomorphic content for " + g.basis_name(i) + ": " + D.str();
      rep.literal.push_back(D);
    } else {
      if (!(D == s.rho[i])) {
        exact = false;
        if (detail.empty()) detail = g.basis_name(i) + ": conjugated " + D.str() + " vs rho " + s.rho[i].str();
      }
      if (!(D == -s.rho[i].reflect_nu())) negated = false;
      for (const auto& f : probes)
        if (!(D.apply(f) == s.rho[i].apply(f))) poly_exact = false;
      rep.literal.push_back(std::move(D));
    }

    bool rh = false;
    const WeylOperator R = conjugated_star_operator(ctx, i, false, -1, s.zvars, &rh);
    if (!rh) right_holo = right_exact = false;
    else if (!(R == s.rho[i])) {
      right_exact = false;
      if (right_detail.empty()) right_detail = g.basis_name(i) + ": " + R.str() + " vs " + s.rho[i].str();
    }
  }
  rep.literal_holomorphic = holo;
  rep.literal_relation = exact ? "exact" : (negated ? "negated_nu_reflected" : "none");
  rep.right_route_exact = right_exact;
  rep.right_route_holomorphic = right_holo;
  rep.polynomial_level_exact = poly_exact;

  rep.checks.add("fourier_holomorphic", holo, holo ? "" : detail);
  rep.checks.add("fourier_operator_identity", exact,
                 exact ? "" : "relation: " + rep.literal_relation + "; first mismatch " + detail);
  rep.checks.add("fourier_polynomial_identity", poly_exact);
  rep.checks.add("right_star_route", right_exact && right_holo,
                 "(1/2nu) F(. * lambda_A) with kernel exp(+i Omega): " +
                     std::string(right_exact && right_holo ? "equals rho^ exactly" : right_detail));
  return rep;
}

}  // namespace jstar
