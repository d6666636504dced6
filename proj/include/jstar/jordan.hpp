#pragma once

// Finite-dimensional Jordan algebras given by rational structure constants.
//
// Every operation is a template over the coefficient ring R of the element
// coordinates (Rational, Scalar or Poly), so the same code evaluates on
// numbers and on symbolic indeterminates.

#include <span>
#include <string>
#include <vector>

#include "jstar/checks.hpp"
#include "jstar/linalg.hpp"
#include "jstar/mpoly.hpp"

namespace jstar {

struct JordanAlgebra {
  std::string name;
  std::size_t dim = 0;
  std::size_t rank = 0;
  std::vector<std::string> basis_names;
  /// structure[a][b][c]: coefficient of e_c in e_a o e_b.
  std::vector<std::vector<std::vector<Rational>>> structure;
  std::vector<Rational> unit;

  const Rational& s(std::size_t a, std::size_t b, std::size_t c) const { return structure[a][b][c]; }
};

template <class R>
using JordanVector = std::vector<R>;

template <class R>
JordanVector<R> basis_vector(const JordanAlgebra& A, std::size_t a) {
  JordanVector<R> v(A.dim);
  v.at(a) = R(Rational(1));
  return v;
}

template <class R>
JordanVector<R> unit_vector(const JordanAlgebra& A) {
  JordanVector<R> v(A.dim);
  for (std::size_t a = 0; a < A.dim; ++a) v[a] = R(A.unit[a]);
  return v;
}

template <class R>
JordanVector<R> jordan_product(const JordanAlgebra& A, std::span<const R> x, std::span<const R> y) {
  JordanVector<R> out(A.dim);
  for (std::size_t a = 0; a < A.dim; ++a) {
    if (x[a] == R{}) continue;
    for (std::size_t b = 0; b < A.dim; ++b) {
      if (y[b] == R{}) continue;
      const R xy = x[a] * y[b];
      for (std::size_t c = 0; c < A.dim; ++c)
        if (!A.s(a, b, c).is_zero()) out[c] += xy * A.s(a, b, c);
    }
  }
  return out;
}

template <class R>
JordanVector<R> jordan_product(const JordanAlgebra& A, const JordanVector<R>& x, const JordanVector<R>& y) {
  return jordan_product<R>(A, std::span<const R>(x), std::span<const R>(y));
}

/// Matrix of y -> x o y in the declared basis.
template <class R>
Matrix<R> L_operator(const JordanAlgebra& A, const JordanVector<R>& x) {
  Matrix<R> m(A.dim, A.dim);
  for (std::size_t a = 0; a < A.dim; ++a) {
    if (x[a] == R{}) continue;
    for (std::size_t b = 0; b < A.dim; ++b)
      for (std::size_t c = 0; c < A.dim; ++c)
        if (!A.s(a, b, c).is_zero()) m(c, b) += x[a] * A.s(a, b, c);
  }
  return m;
}

/// tau(x, y) = Tr L(x o y).
template <class R>
R tau_form(const JordanAlgebra& A, const JordanVector<R>& x, const JordanVector<R>& y) {
  return L_operator(A, jordan_product(A, x, y)).trace();
}

/// tr(x) = (r/n) Tr L(x); tr(e) = r.
template <class R>
R jordan_trace(const JordanAlgebra& A, const JordanVector<R>& x) {
  return L_operator(A, x).trace() * Rational(static_cast<long>(A.rank), static_cast<long>(A.dim));
}

/// x box y = L(x o y) + [L(x), L(y)], the matrix of z -> {x, y, z}.
template <class R>
Matrix<R> box_operator(const JordanAlgebra& A, const JordanVector<R>& x, const JordanVector<R>& y) {
  return L_operator(A, jordan_product(A, x, y)) + commutator(L_operator(A, x), L_operator(A, y));
}

/// {x, y, z} = (x o y) o z + x o (y o z) - y o (x o z).
template <class R>
JordanVector<R> triple_product(const JordanAlgebra& A, const JordanVector<R>& x, const JordanVector<R>& y,
                               const JordanVector<R>& z) {
  JordanVector<R> out = jordan_product(A, jordan_product(A, x, y), z);
  const JordanVector<R> b = jordan_product(A, x, jordan_product(A, y, z));
  const JordanVector<R> c = jordan_product(A, y, jordan_product(A, x, z));
  for (std::size_t i = 0; i < A.dim; ++i) out[i] += b[i] - c[i];
  return out;
}

/// P(z) = 2 L(z)^2 - L(z^2).
template <class R>
Matrix<R> quadratic_rep(const JordanAlgebra& A, const JordanVector<R>& z) {
  const Matrix<R> Lz = L_operator(A, z);
  return (Lz * Lz).scaled(Rational(2)) - L_operator(A, jordan_product(A, z, z));
}

inline Matrix<Rational> tau_gram(const JordanAlgebra& A) {
  Matrix<Rational> g(A.dim, A.dim);
  for (std::size_t a = 0; a < A.dim; ++a)
    for (std::size_t b = 0; b < A.dim; ++b)
      g(a, b) = tau_form(A, basis_vector<Rational>(A, a), basis_vector<Rational>(A, b));
  return g;
}

// ---------------------------------------------------------------------------
// Built-in instances

inline JordanAlgebra make_rank_one() {
  JordanAlgebra A;
  A.name = "rank1";
  A.dim = 1;
  A.rank = 1;
  A.basis_names = {"e"};
  A.structure = {{{Rational(1)}}};
  A.unit = {Rational(1)};
  return A;
}

/// R + R^{k-1} with (s,u) o (t,v) = (st + <u,v>, sv + tu).
inline JordanAlgebra make_spin_factor(long k) {
  if (k < 2) throw InvalidDimension("spin factor needs k >= 2, got " + std::to_string(k));
  const auto n = static_cast<std::size_t>(k);
  JordanAlgebra A;
  A.name = "spin:" + std::to_string(k);
  A.dim = n;
  A.rank = 2;
  A.basis_names.push_back("e0");
  for (std::size_t i = 1; i < n; ++i) A.basis_names.push_back("e" + std::to_string(i));
  A.structure.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
  A.structure[0][0][0] = Rational(1);
  for (std::size_t i = 1; i < n; ++i) {
    A.structure[0][i][i] = Rational(1);
    A.structure[i][0][i] = Rational(1);
    A.structure[i][i][0] = Rational(1);
  }
  A.unit.assign(n, Rational(0));
  A.unit[0] = Rational(1);
  return A;
}

/// Real symmetric p x p matrices with x o y = (xy + yx)/2. Basis: E_aa for
/// a = 1..p, then E_ab + E_ba for a < b in lexicographic order.
inline JordanAlgebra make_sym_matrices(long p) {
  if (p < 1) throw InvalidDimension("Sym(p) needs p >= 1, got " + std::to_string(p));
  const auto q = static_cast<std::size_t>(p);
  std::vector<std::pair<std::size_t, std::size_t>> index;
  for (std::size_t a = 0; a < q; ++a) index.emplace_back(a, a);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b) index.emplace_back(a, b);
  const std::size_t n = index.size();

  auto as_matrix = [&](std::size_t k) {
    Matrix<Rational> m(q, q);
    auto [a, b] = index[k];
    m(a, b) = Rational(1);
    m(b, a) = Rational(1);
    return m;
  };

  JordanAlgebra A;
  A.name = "sym:" + std::to_string(p);
  A.dim = n;
  A.rank = q;
  for (auto [a, b] : index)
    A.basis_names.push_back(a == b ? "E" + std::to_string(a + 1) + std::to_string(a + 1)
                                   : "F" + std::to_string(a + 1) + std::to_string(b + 1));
  A.structure.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix<Rational> x = as_matrix(i);
      const Matrix<Rational> y = as_matrix(j);
      const Matrix<Rational> prod = (x * y + y * x).scaled(Rational(1, 2));
      for (std::size_t k = 0; k < n; ++k) {
        auto [a, b] = index[k];
        A.structure[i][j][k] = prod(a, b);
      }
    }
  A.unit.assign(n, Rational(0));
  for (std::size_t a = 0; a < q; ++a) A.unit[a] = Rational(1);
  return A;
}

// ---------------------------------------------------------------------------
// Validation

/// Symbolic proof of the axioms: commutativity and the Jordan identity are
/// expanded with two vectors of indeterminate coordinates.
inline CheckList validate_jordan(const JordanAlgebra& A) {
  CheckList report;
  const std::size_t n = A.dim;

  bool shape_ok = n > 0 && A.rank > 0 && A.unit.size() == n && A.structure.size() == n;
  for (const auto& row : A.structure) {
    shape_ok = shape_ok && row.size() == n;
    for (const auto& col : row) shape_ok = shape_ok && col.size() == n;
  }
  report.add("shape", shape_ok, shape_ok ? "" : "structure table, unit or rank has the wrong size");
  if (!shape_ok) return report;

  std::string detail;
  for (std::size_t a = 0; a < n && detail.empty(); ++a)
    for (std::size_t b = a + 1; b < n && detail.empty(); ++b)
      if (A.structure[a][b] != A.structure[b][a])
        detail = "S[" + std::to_string(a) + "][" + std::to_string(b) + "] != S[" + std::to_string(b) + "][" +
                 std::to_string(a) + "]";

  std::vector<std::string> names = VarSet::indexed("x", n);
  for (auto& y : VarSet::indexed("y", n)) names.push_back(y);
  const VarSetPtr vars = make_varset(names);
  JordanVector<Poly> x(n), y(n);
  for (std::size_t a = 0; a < n; ++a) {
    x[a] = Poly::variable(vars, a);
    y[a] = Poly::variable(vars, n + a);
  }

  const auto xy = jordan_product(A, x, y);
  const auto yx = jordan_product(A, y, x);
  for (std::size_t c = 0; c < n && detail.empty(); ++c)
    if (!(xy[c] == yx[c])) detail = "component " + std::to_string(c) + ": " + (xy[c] - yx[c]).str();
  report.add("commutativity", detail.empty(), detail);

  const auto x2 = jordan_product(A, x, x);
  const auto lhs = jordan_product(A, x, jordan_product(A, x2, y));
  const auto rhs = jordan_product(A, x2, jordan_product(A, x, y));
  detail.clear();
  for (std::size_t c = 0; c < n && detail.empty(); ++c)
    if (!(lhs[c] == rhs[c])) detail = "component " + std::to_string(c) + ": " + (lhs[c] - rhs[c]).str();
  report.add("jordan_identity", detail.empty(), detail);

  const auto ex = jordan_product(A, unit_vector<Poly>(A), x);
  detail.clear();
  for (std::size_t c = 0; c < n && detail.empty(); ++c)
    if (!(ex[c] == x[c])) detail = "e o x differs from x in component " + std::to_string(c) + ": " + ex[c].str();
  report.add("unit", detail.empty(), detail);

  const Matrix<Rational> gram = tau_gram(A);
  detail.clear();
  if (!(gram == gram.transpose())) detail = "trace form is not symmetric";
  const auto minors = leading_minors(gram);
  for (std::size_t k = 0; k < minors.size() && detail.empty(); ++k)
    if (minors[k].sign() <= 0) detail = "leading minor " + std::to_string(k + 1) + " = " + minors[k].str();
  report.add("trace_form_positive_definite", detail.empty(), detail);
  return report;
}

/// Validates a raw table; throws ValidationFailed naming the first violated
/// identity.
inline JordanAlgebra load_from_structure_constants(JordanAlgebra table) {
  if (table.basis_names.empty())
    for (std::size_t a = 0; a < table.dim; ++a) table.basis_names.push_back("e" + std::to_string(a + 1));
  const CheckList report = validate_jordan(table);
  for (const auto& check : report.checks)
    if (!check.passed) throw ValidationFailed(check.name + (check.detail.empty() ? "" : " (" + check.detail + ")"));
  return table;
}

} // namespace jstar
