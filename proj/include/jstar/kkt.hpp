#pragma once

// The 3-graded Lie algebra g = g_{-1} + g_0 + g_1 of a Jordan algebra.
//
// Elements are triples (u, T, v): u a translation, T in g_0 = span{x box y}
// and v the quadratic part. Coordinates are taken in the ordered basis
//   [ u_1 .. u_n | B_1 .. B_d | v_1 .. v_n ]
// where u_a = (e_a, 0, 0), B_k = (0, B_k, 0) and v_a = (0, 0, e_a).
// l := g_{-1} (the u's) and l' := g_1 (the v's); the grading element
// E = (0, Id, 0) acts by +1 on l and -1 on l'.

#include <optional>
#include <string>
#include <vector>

#include "jstar/checks.hpp"
#include "jstar/jordan.hpp"

namespace jstar {

struct LieElement {
  JordanVector<Rational> u;
  Matrix<Rational> T;
  JordanVector<Rational> v;

  static LieElement zero(std::size_t n) { return {JordanVector<Rational>(n), Matrix<Rational>(n, n), JordanVector<Rational>(n)}; }
  friend bool operator==(const LieElement&, const LieElement&) = default;
};

enum class Part { l, h, lp };

struct GradedLieAlgebra {
  JordanAlgebra jordan;
  Rational mu;
  std::size_t n = 0;    // dim of the Jordan algebra
  std::size_t d0 = 0;   // dim g_0
  std::size_t dim = 0;  // 2n + d0

  std::vector<Matrix<Rational>> g0_basis;
  SpanBasis g0_span{0};
  Matrix<Rational> tau_gram;
  Matrix<Rational> tau_gram_inv;

  /// table[i * dim + j] lists the nonzero (k, c_ij^k) of [X_i, X_j].
  std::vector<std::vector<std::pair<std::size_t, Rational>>> table;
  Matrix<Rational> killing;  // Tr(ad X_i ad X_j)

  std::vector<Rational> grading_element;
  std::vector<Rational> o;  // base point mu * E
  Rational c;               // eigenvalue of ad(o) on l

  std::size_t l_index(std::size_t a) const { return a; }
  std::size_t h_index(std::size_t k) const { return n + k; }
  std::size_t lp_index(std::size_t a) const { return n + d0 + a; }
  Part part(std::size_t i) const { return i < n ? Part::l : (i < n + d0 ? Part::h : Part::lp); }
  /// Grade convention: l = -1, g_0 = 0, l' = +1.
  int grade(std::size_t i) const { return i < n ? -1 : (i < n + d0 ? 0 : 1); }

  const std::vector<std::pair<std::size_t, Rational>>& structure(std::size_t i, std::size_t j) const {
    return table[i * dim + j];
  }
  std::string basis_name(std::size_t i) const {
    switch (part(i)) {
      case Part::l: return "u" + std::to_string(i + 1);
      case Part::h: return "h" + std::to_string(i - n + 1);
      case Part::lp: return "v" + std::to_string(i - n - d0 + 1);
    }
    return {};
  }
};

/// tau-adjoint: tau(T x, y) = tau(x, T# y), i.e. T# = G^-1 T^t G.
inline Matrix<Rational> sharp(const GradedLieAlgebra& g, const Matrix<Rational>& T) {
  return g.tau_gram_inv * T.transpose() * g.tau_gram;
}

namespace detail {

inline std::vector<Rational> flatten(const Matrix<Rational>& m) { return m.data(); }

inline Matrix<Rational> box_rational(const JordanAlgebra& A, const JordanVector<Rational>& x,
                                     const JordanVector<Rational>& y) {
  return box_operator(A, x, y);
}

}  // namespace detail

/// [X, X'] = (T u' - T' u, 2 u' box v + [T, T'] - 2 u box v', T'# v - T# v').
inline LieElement bracket(const GradedLieAlgebra& g, const LieElement& X, const LieElement& Y) {
  const auto& A = g.jordan;
  LieElement r = LieElement::zero(g.n);
  const auto Tu = X.T.apply(Y.u);
  const auto Su = Y.T.apply(X.u);
  const auto Sv = sharp(g, Y.T).apply(X.v);
  const auto Tv = sharp(g, X.T).apply(Y.v);
  for (std::size_t a = 0; a < g.n; ++a) {
    r.u[a] = Tu[a] - Su[a];
    r.v[a] = Sv[a] - Tv[a];
  }
  r.T = detail::box_rational(A, Y.u, X.v).scaled(Rational(2)) + commutator(X.T, Y.T) -
        detail::box_rational(A, X.u, Y.v).scaled(Rational(2));
  return r;
}

/// theta(u, T, v) = (v, -T#, u).
inline LieElement theta(const GradedLieAlgebra& g, const LieElement& X) {
  return {X.v, -sharp(g, X.T), X.u};
}

inline LieElement to_element(const GradedLieAlgebra& g, const std::vector<Rational>& x) {
  LieElement e = LieElement::zero(g.n);
  for (std::size_t a = 0; a < g.n; ++a) {
    e.u[a] = x[g.l_index(a)];
    e.v[a] = x[g.lp_index(a)];
  }
  for (std::size_t k = 0; k < g.d0; ++k)
    if (!x[g.h_index(k)].is_zero()) e.T += g.g0_basis[k].scaled(x[g.h_index(k)]);
  return e;
}

/// Coordinates of T in the g_0 basis; nullopt when T is outside g_0.
inline std::optional<std::vector<Rational>> g0_coordinates(const GradedLieAlgebra& g, const Matrix<Rational>& T) {
  return g.g0_span.coordinates(detail::flatten(T));
}

inline std::vector<Rational> to_coords(const GradedLieAlgebra& g, const LieElement& e) {
  std::vector<Rational> x(g.dim);
  for (std::size_t a = 0; a < g.n; ++a) {
    x[g.l_index(a)] = e.u[a];
    x[g.lp_index(a)] = e.v[a];
  }
  auto t = g0_coordinates(g, e.T);
  if (!t) throw GradingClosureFailure("matrix " + e.T.str() + " is not in g_0");
  for (std::size_t k = 0; k < g.d0; ++k) x[g.h_index(k)] = (*t)[k];
  return x;
}

inline std::vector<Rational> basis_coords(const GradedLieAlgebra& g, std::size_t i) {
  std::vector<Rational> x(g.dim);
  x.at(i) = Rational(1);
  return x;
}

/// [x, y] from the structure constants; works for symbolic coordinates.
template <class R>
std::vector<R> bracket_coords(const GradedLieAlgebra& g, const std::vector<R>& x, const std::vector<R>& y) {
  std::vector<R> out(g.dim);
  for (std::size_t i = 0; i < g.dim; ++i) {
    if (x[i] == R{}) continue;
    for (std::size_t j = 0; j < g.dim; ++j) {
      if (y[j] == R{}) continue;
      const auto& entries = g.structure(i, j);
      if (entries.empty()) continue;
      const R xy = x[i] * y[j];
      for (const auto& [k, ck] : entries) out[k] += xy * ck;
    }
  }
  return out;
}

/// Killing form x^t K y with the intrinsic Gram matrix.
template <class R>
R killing_intrinsic(const GradedLieAlgebra& g, const std::vector<R>& x, const std::vector<R>& y) {
  R sum{};
  for (std::size_t i = 0; i < g.dim; ++i) {
    if (x[i] == R{}) continue;
    for (std::size_t j = 0; j < g.dim; ++j)
      if (!g.killing(i, j).is_zero() && !(y[j] == R{})) sum += x[i] * y[j] * g.killing(i, j);
  }
  return sum;
}

/// beta_o(T,T') + 2 tr(TT') - 4 tau(u,v') - 4 tau(v,u') with
/// beta_o(T,T') = 2n tr(TT') - 2 tr(T) tr(T'), the Killing form of gl_n.
inline Rational killing_closed_form(const GradedLieAlgebra& g, const LieElement& X, const LieElement& Y) {
  const auto& A = g.jordan;
  const Rational n(static_cast<long>(g.n));
  const Rational trTT = (X.T * Y.T).trace();
  const Rational beta_o = Rational(2) * n * trTT - Rational(2) * X.T.trace() * Y.T.trace();
  return beta_o + Rational(2) * trTT - Rational(4) * tau_form(A, X.u, Y.v) - Rational(4) * tau_form(A, X.v, Y.u);
}

/// Same expression with beta_o replaced by the Killing form of g_0 itself,
/// Tr_{g_0}(ad T ad T'). Used to locate the disagreement when the gl_n
/// version is not proportional to the intrinsic form.
inline Rational killing_closed_form_g0(const GradedLieAlgebra& g, const std::vector<Rational>& x,
                                       const std::vector<Rational>& y);

inline bool in_q(const GradedLieAlgebra& g, const std::vector<Rational>& x) {
  for (std::size_t k = 0; k < g.d0; ++k)
    if (!x[g.h_index(k)].is_zero()) return false;
  return true;
}

/// Omega(X, Y) = beta(o, [X, Y]) on q = l + l'.
template <class R>
R omega_form(const GradedLieAlgebra& g, const std::vector<R>& x, const std::vector<R>& y) {
  std::vector<R> o(g.dim);
  for (std::size_t i = 0; i < g.dim; ++i) o[i] = R(g.o[i]);
  return killing_intrinsic(g, o, bracket_coords(g, x, y));
}

inline Rational omega_form_checked(const GradedLieAlgebra& g, const std::vector<Rational>& x,
                                   const std::vector<Rational>& y) {
  if (!in_q(g, x) || !in_q(g, y)) throw NotInQ("argument has a g_0 component");
  return omega_form(g, x, y);
}

/// {L_a} = u_a in l, {L'_a} in l' with Omega(L_a, L'_b) = delta_ab.
struct SymplecticChartBasis {
  std::vector<std::vector<Rational>> L;
  std::vector<std::vector<Rational>> Lp;
  Matrix<Rational> pairing;  // Omega(L_a, L'_b), the identity after construction
};

inline SymplecticChartBasis symplectic_basis(const GradedLieAlgebra& g) {
  Matrix<Rational> P(g.n, g.n);
  std::vector<std::vector<Rational>> u, v;
  for (std::size_t a = 0; a < g.n; ++a) {
    u.push_back(basis_coords(g, g.l_index(a)));
    v.push_back(basis_coords(g, g.lp_index(a)));
  }
  for (std::size_t a = 0; a < g.n; ++a)
    for (std::size_t c = 0; c < g.n; ++c) P(a, c) = omega_form(g, u[a], v[c]);
  auto M = inverse(P);
  if (!M) throw SingularPairing("Omega(u_a, v_c) is singular; is mu zero?");

  SymplecticChartBasis basis;
  basis.L = u;
  for (std::size_t b = 0; b < g.n; ++b) {
    std::vector<Rational> lp(g.dim);
    for (std::size_t c = 0; c < g.n; ++c) lp[g.lp_index(c)] = (*M)(c, b);
    basis.Lp.push_back(std::move(lp));
  }
  basis.pairing = Matrix<Rational>(g.n, g.n);
  for (std::size_t a = 0; a < g.n; ++a)
    for (std::size_t b = 0; b < g.n; ++b) basis.pairing(a, b) = omega_form(g, basis.L[a], basis.Lp[b]);
  return basis;
}

/// spur(h) = sum_a Omega([h, L_a], L'_a), the trace of ad(h) on l.
template <class R>
R spur(const GradedLieAlgebra& g, const SymplecticChartBasis& basis, const std::vector<R>& h) {
  R total{};
  for (std::size_t a = 0; a < g.n; ++a) {
    std::vector<R> La(g.dim), Lpa(g.dim);
    for (std::size_t i = 0; i < g.dim; ++i) {
      La[i] = R(basis.L[a][i]);
      Lpa[i] = R(basis.Lp[a][i]);
    }
    total += omega_form(g, bracket_coords(g, h, La), Lpa);
  }
  return total;
}

inline Rational killing_closed_form_g0(const GradedLieAlgebra& g, const std::vector<Rational>& x,
                                       const std::vector<Rational>& y) {
  const LieElement X = to_element(g, x);
  const LieElement Y = to_element(g, y);
  // ad restricted to g_0, in g_0 coordinates
  auto ad0 = [&](const std::vector<Rational>& z) {
    Matrix<Rational> m(g.d0, g.d0);
    std::vector<Rational> t(g.dim);
    for (std::size_t k = 0; k < g.d0; ++k) t[g.h_index(k)] = z[g.h_index(k)];
    for (std::size_t k = 0; k < g.d0; ++k) {
      const auto col = bracket_coords(g, t, basis_coords(g, g.h_index(k)));
      for (std::size_t m2 = 0; m2 < g.d0; ++m2) m(m2, k) = col[g.h_index(m2)];
    }
    return m;
  };
  const Rational beta0 = (ad0(x) * ad0(y)).trace();
  const auto& A = g.jordan;
  return beta0 + Rational(2) * (X.T * Y.T).trace() - Rational(4) * tau_form(A, X.u, Y.v) -
         Rational(4) * tau_form(A, X.v, Y.u);
}

namespace detail {

inline void fill_killing(GradedLieAlgebra& g) {
  // K_ij = sum_{p,q} c_{i p}^q c_{j q}^p
  g.killing = Matrix<Rational>(g.dim, g.dim);
  std::vector<Matrix<Rational>> ad(g.dim, Matrix<Rational>(g.dim, g.dim));
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t p = 0; p < g.dim; ++p)
      for (const auto& [q, c] : g.structure(i, p)) ad[i](q, p) = c;
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = i; j < g.dim; ++j) {
      const Rational k = (ad[i] * ad[j]).trace();
      g.killing(i, j) = k;
      g.killing(j, i) = k;
    }
}

}  // namespace detail

/// Builds g from a validated Jordan algebra with base point o = mu E.
inline GradedLieAlgebra build_kkt(const JordanAlgebra& A, const Rational& mu) {
  if (mu.is_zero()) throw InvalidDimension("mu must be nonzero");
  GradedLieAlgebra g;
  g.jordan = A;
  g.mu = mu;
  g.n = A.dim;
  g.tau_gram = tau_gram(A);
  auto inv = inverse(g.tau_gram);
  if (!inv) throw ValidationFailed("trace form is degenerate");
  g.tau_gram_inv = *inv;

  g.g0_span = SpanBasis(g.n * g.n);
  for (std::size_t a = 0; a < g.n; ++a)
    for (std::size_t b = 0; b < g.n; ++b) {
      Matrix<Rational> B = box_operator(A, basis_vector<Rational>(A, a), basis_vector<Rational>(A, b));
      if (g.g0_span.insert(detail::flatten(B))) g.g0_basis.push_back(std::move(B));
    }
  g.d0 = g.g0_basis.size();
  g.dim = 2 * g.n + g.d0;

  for (std::size_t k = 0; k < g.d0; ++k) {
    if (!g0_coordinates(g, sharp(g, g.g0_basis[k])))
      throw GradingClosureFailure("g_0 is not closed under the tau-adjoint");
    for (std::size_t m = k + 1; m < g.d0; ++m)
      if (!g0_coordinates(g, commutator(g.g0_basis[k], g.g0_basis[m])))
        throw GradingClosureFailure("[g_0, g_0] is not contained in span{x box y}");
  }

  std::vector<LieElement> basis;
  for (std::size_t i = 0; i < g.dim; ++i) {
    LieElement e = LieElement::zero(g.n);
    switch (g.part(i)) {
      case Part::l: e.u[i] = Rational(1); break;
      case Part::h: e.T = g.g0_basis[i - g.n]; break;
      case Part::lp: e.v[i - g.n - g.d0] = Rational(1); break;
    }
    basis.push_back(std::move(e));
  }

  g.table.assign(g.dim * g.dim, {});
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = i + 1; j < g.dim; ++j) {
      const auto x = to_coords(g, bracket(g, basis[i], basis[j]));
      for (std::size_t k = 0; k < g.dim; ++k) {
        if (x[k].is_zero()) continue;
        g.table[i * g.dim + j].emplace_back(k, x[k]);
        g.table[j * g.dim + i].emplace_back(k, -x[k]);
      }
    }
  detail::fill_killing(g);

  g.grading_element = to_coords(g, LieElement{JordanVector<Rational>(g.n), Matrix<Rational>::identity(g.n),
                                              JordanVector<Rational>(g.n)});
  g.o.resize(g.dim);
  for (std::size_t i = 0; i < g.dim; ++i) g.o[i] = mu * g.grading_element[i];
  // ad(o) u_1 = c u_1
  const auto ad_o = bracket_coords(g, g.o, basis_coords(g, g.l_index(0)));
  g.c = ad_o[g.l_index(0)];
  return g;
}

/// Adds `delta` to c_ij^k (and subtracts it from c_ji^k), then recomputes the
/// Killing form. Used as a negative control.
inline GradedLieAlgebra perturb_structure_constant(GradedLieAlgebra g, std::size_t i, std::size_t j, std::size_t k,
                                                   const Rational& delta) {
  auto bump = [&](std::size_t p, std::size_t q, const Rational& d) {
    auto& entries = g.table[p * g.dim + q];
    for (auto it = entries.begin(); it != entries.end(); ++it)
      if (it->first == k) {
        it->second += d;
        if (it->second.is_zero()) entries.erase(it);
        return;
      }
    entries.emplace_back(k, d);
  };
  bump(i, j, delta);
  bump(j, i, -delta);
  detail::fill_killing(g);
  return g;
}

/// Matrix of a linear map on coordinates: column i is the image of X_i.
template <class F>
Matrix<Rational> coordinate_matrix(const GradedLieAlgebra& g, F&& f) {
  Matrix<Rational> m(g.dim, g.dim);
  for (std::size_t i = 0; i < g.dim; ++i) {
    const auto y = f(basis_coords(g, i));
    for (std::size_t k = 0; k < g.dim; ++k) m(k, i) = y[k];
  }
  return m;
}

inline Matrix<Rational> theta_matrix(const GradedLieAlgebra& g) {
  return coordinate_matrix(g, [&](const std::vector<Rational>& x) { return to_coords(g, theta(g, to_element(g, x))); });
}

/// Structural verification of g, with the measured constants it produces.
struct KktReport {
  CheckList checks;
  Rational kappa_g;            // closed form = kappa_g * intrinsic
  bool kappa_g_defined = false;
  bool g0_variant_exact = false;  // closed form with beta_o := Killing of g_0
  std::string g0_variant_detail;
  int identification_sign = 0; // x box y = sign * (-1/2) [x, theta y]_0
};

inline KktReport verify_kkt(const GradedLieAlgebra& g) {
  KktReport rep;
  auto& checks = rep.checks;
  auto basis = [&](std::size_t i) { return basis_coords(g, i); };
  auto nonzero = [](const std::vector<Rational>& x) {
    for (const auto& v : x)
      if (!v.is_zero()) return true;
    return false;
  };
  auto show = [&](const std::vector<Rational>& x) {
    std::string s;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (!x[k].is_zero()) s += (s.empty() ? "" : " + ") + ("(" + x[k].str() + ")" + g.basis_name(k));
    return s.empty() ? std::string("0") : s;
  };

  // Jacobi on all triples i < j < k.
  std::string detail;
  for (std::size_t i = 0; i < g.dim && detail.empty(); ++i)
    for (std::size_t j = i + 1; j < g.dim && detail.empty(); ++j)
      for (std::size_t k = j + 1; k < g.dim && detail.empty(); ++k) {
        auto a = bracket_coords(g, bracket_coords(g, basis(i), basis(j)), basis(k));
        auto b = bracket_coords(g, bracket_coords(g, basis(j), basis(k)), basis(i));
        auto c = bracket_coords(g, bracket_coords(g, basis(k), basis(i)), basis(j));
        for (std::size_t m = 0; m < g.dim; ++m) a[m] += b[m] + c[m];
        if (nonzero(a))
          detail = "(" + g.basis_name(i) + "," + g.basis_name(j) + "," + g.basis_name(k) + "): " + show(a);
      }
  checks.add("jacobi", detail.empty(), detail);

  // Grading: [g_i, g_j] in g_{i+j}.
  detail.clear();
  for (std::size_t i = 0; i < g.dim && detail.empty(); ++i)
    for (std::size_t j = 0; j < g.dim && detail.empty(); ++j)
      for (const auto& [k, ck] : g.structure(i, j))
        if (g.grade(k) != g.grade(i) + g.grade(j)) {
          detail = "[" + g.basis_name(i) + "," + g.basis_name(j) + "] has a component on " + g.basis_name(k);
          break;
        }
  checks.add("grading", detail.empty(), detail);

  // E acts by +1 on l, 0 on g_0, -1 on l'; ad(o)|_l = c id with c = mu.
  detail.clear();
  for (std::size_t i = 0; i < g.dim && detail.empty(); ++i) {
    auto y = bracket_coords(g, g.grading_element, basis(i));
    auto expected = basis(i);
    const Rational eig(g.part(i) == Part::l ? 1 : (g.part(i) == Part::h ? 0 : -1));
    for (auto& e : expected) e *= eig;
    if (y != expected) detail = "[E," + g.basis_name(i) + "] = " + show(y);
  }
  checks.add("grading_element", detail.empty(), detail);
  checks.add("base_point_eigenvalue", g.c == g.mu, "c = " + g.c.str() + ", mu = " + g.mu.str());

  // theta: involution, automorphism, theta(g_i) = g_{-i}.
  const Matrix<Rational> Th = theta_matrix(g);
  detail.clear();
  if (!(Th * Th == Matrix<Rational>::identity(g.dim))) detail = "theta^2 != id";
  for (std::size_t i = 0; i < g.dim && detail.empty(); ++i)
    for (std::size_t k = 0; k < g.dim; ++k)
      if (!Th(k, i).is_zero() && g.grade(k) != -g.grade(i)) {
        detail = "theta(" + g.basis_name(i) + ") has a component on " + g.basis_name(k);
        break;
      }
  for (std::size_t i = 0; i < g.dim && detail.empty(); ++i)
    for (std::size_t j = i + 1; j < g.dim && detail.empty(); ++j) {
      auto lhs = Th.apply(bracket_coords(g, basis(i), basis(j)));
      auto rhs = bracket_coords(g, Th.apply(basis(i)), Th.apply(basis(j)));
      if (lhs != rhs) detail = "theta[" + g.basis_name(i) + "," + g.basis_name(j) + "] != [theta, theta]";
    }
  checks.add("theta_automorphism", detail.empty(), detail);

  // [l, l] = 0, [l', l'] = 0, beta- and Omega-isotropy.
  detail.clear();
  for (std::size_t a = 0; a < g.n && detail.empty(); ++a)
    for (std::size_t b = 0; b < g.n && detail.empty(); ++b) {
      const std::size_t la = g.l_index(a), lb = g.l_index(b), pa = g.lp_index(a), pb = g.lp_index(b);
      if (!g.structure(la, lb).empty() || !g.structure(pa, pb).empty()) detail = "[l,l] or [l',l'] nonzero";
      else if (!g.killing(la, lb).is_zero() || !g.killing(pa, pb).is_zero()) detail = "beta not isotropic";
      else if (!omega_form(g, basis(la), basis(lb)).is_zero() || !omega_form(g, basis(pa), basis(pb)).is_zero())
        detail = "Omega not Lagrangian";
    }
  checks.add("lagrangian_splitting", detail.empty(), detail);

  // Killing invariance beta([Z,X],Y) + beta(X,[Z,Y]) = 0.
  detail.clear();
  for (std::size_t z = 0; z < g.dim && detail.empty(); ++z)
    for (std::size_t x = 0; x < g.dim && detail.empty(); ++x)
      for (std::size_t y = x; y < g.dim && detail.empty(); ++y) {
        Rational r = killing_intrinsic(g, bracket_coords(g, basis(z), basis(x)), basis(y)) +
                     killing_intrinsic(g, basis(x), bracket_coords(g, basis(z), basis(y)));
        if (!r.is_zero())
          detail = "(" + g.basis_name(z) + "," + g.basis_name(x) + "," + g.basis_name(y) + "): " + r.str();
      }
  checks.add("killing_invariance", detail.empty(), detail);

  bool nondegenerate = inverse(g.killing).has_value();
  checks.add("killing_nondegenerate", nondegenerate);

  // Closed form versus intrinsic: one constant kappa_g.
  detail.clear();
  for (std::size_t i = 0; i < g.dim && detail.empty(); ++i)
    for (std::size_t j = 0; j < g.dim && detail.empty(); ++j) {
      const Rational closed = killing_closed_form(g, to_element(g, basis(i)), to_element(g, basis(j)));
      const Rational& intrinsic = g.killing(i, j);
      if (!rep.kappa_g_defined && !intrinsic.is_zero()) {
        rep.kappa_g = closed / intrinsic;
        rep.kappa_g_defined = true;
      }
      if (rep.kappa_g_defined ? !(closed == rep.kappa_g * intrinsic) : !closed.is_zero())
        detail = "(" + g.basis_name(i) + "," + g.basis_name(j) + "): closed " + closed.str() + ", intrinsic " +
                 intrinsic.str();
    }
  checks.add("killing_closed_form_proportional", detail.empty() && rep.kappa_g_defined,
             detail.empty() ? "kappa_g = " + rep.kappa_g.str() : detail);

  // Diagnostic: with the Killing form of g_0 in place of gl_n the identity is exact.
  detail.clear();
  for (std::size_t i = 0; i < g.dim && detail.empty(); ++i)
    for (std::size_t j = i; j < g.dim && detail.empty(); ++j) {
      const Rational v = killing_closed_form_g0(g, basis(i), basis(j));
      if (!(v == g.killing(i, j)))
        detail = "(" + g.basis_name(i) + "," + g.basis_name(j) + "): " + v.str() + " vs " + g.killing(i, j).str();
    }
  rep.g0_variant_exact = detail.empty();
  rep.g0_variant_detail = detail;

  // x box y = s (-1/2) [x, theta y]_0 and {x,y,z} = s (-1/2) [[x, theta y], z].
  const auto& A = g.jordan;
  detail.clear();
  int sign = 0;
  for (std::size_t a = 0; a < g.n && detail.empty(); ++a)
    for (std::size_t b = 0; b < g.n && detail.empty(); ++b) {
      auto x = basis(g.l_index(a));
      auto ty = Th.apply(basis(g.l_index(b)));
      const LieElement br = to_element(g, bracket_coords(g, x, ty));
      const Matrix<Rational> lhs = box_operator(A, basis_vector<Rational>(A, a), basis_vector<Rational>(A, b));
      const Matrix<Rational> rhs = br.T.scaled(Rational(-1, 2));
      int s = lhs == rhs ? 1 : (lhs == -rhs ? -1 : 0);
      if (sign == 0) sign = s;
      if (s == 0 || s != sign) detail = "box(" + std::to_string(a) + "," + std::to_string(b) + ") mismatch";
      for (std::size_t cidx = 0; cidx < g.n && detail.empty(); ++cidx) {
        const auto triple = triple_product(A, basis_vector<Rational>(A, a), basis_vector<Rational>(A, b),
                                           basis_vector<Rational>(A, cidx));
        const LieElement t = to_element(g, bracket_coords(g, bracket_coords(g, x, ty), basis(g.l_index(cidx))));
        for (std::size_t m = 0; m < g.n; ++m)
          if (!(triple[m] == Rational(sign) * Rational(-1, 2) * t.u[m]) || !t.T.is_zero())
            detail = "triple(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(cidx) + ")";
      }
    }
  rep.identification_sign = sign;
  checks.add("identifications", detail.empty(), detail.empty() ? "sign = " + std::to_string(sign) : detail);
  return rep;
}

}  // namespace jstar
