#pragma once

// Polynomial differential operators sum_beta C_beta(x) d^beta in normal order
// (multiplications left of derivatives), the Moyal product and the exact
// conjugations standing in for the partial Fourier transform and the change
// to holomorphic coordinates.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "jstar/checks.hpp"
#include "jstar/mpoly.hpp"

namespace jstar {

class WeylOperator {
public:
  using Terms = std::map<Exponents, Poly>;  // derivative multi-index -> coefficient

  WeylOperator() = default;
  explicit WeylOperator(VarSetPtr vars) : vars_(std::move(vars)) {}

  static WeylOperator multiplication(const Poly& p) {
    WeylOperator d(p.varset());
    d.add(Exponents(d.nvars(), 0), p);
    return d;
  }
  static WeylOperator scalar(const VarSetPtr& vars, const Scalar& s) {
    return multiplication(Poly::constant(vars, s));
  }
  static WeylOperator identity(const VarSetPtr& vars) { return scalar(vars, Scalar(1)); }
  static WeylOperator variable(const VarSetPtr& vars, std::size_t i) {
    return multiplication(Poly::variable(vars, i));
  }
  static WeylOperator derivative(const VarSetPtr& vars, std::size_t i) {
    WeylOperator d(vars);
    Exponents e(vars->size(), 0);
    e.at(i) = 1;
    d.add(e, Poly::constant(vars, Scalar(1)));
    return d;
  }

  const VarSetPtr& varset() const { return vars_; }
  std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Highest total derivative order; -1 for the zero operator.
  int order() const {
    int o = -1;
    for (const auto& [beta, c] : terms_) {
      int s = 0;
      for (auto b : beta) s += b;
      o = std::max(o, s);
    }
    return o;
  }
  Poly coefficient(const Exponents& beta) const {
    auto it = terms_.find(beta);
    return it == terms_.end() ? Poly(vars_) : it->second;
  }

  void add(const Exponents& beta, const Poly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(beta, c.lifted(vars_));
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  WeylOperator operator-() const {
    WeylOperator r(vars_);
    for (const auto& [b, c] : terms_) r.terms_.emplace(b, -c);
    return r;
  }
  WeylOperator& operator+=(const WeylOperator& o) {
    check(o);
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  WeylOperator& operator-=(const WeylOperator& o) {
    check(o);
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
  }
  friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
  friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }
  friend WeylOperator operator*(const WeylOperator& a, const Scalar& s) {
    WeylOperator r(a.vars_);
    if (s.is_zero()) return r;
    for (const auto& [b, c] : a.terms_) r.add(b, c * s);
    return r;
  }
  friend WeylOperator operator*(const Scalar& s, const WeylOperator& a) { return a * s; }

  /// Composition. d^beta D = sum_kappa C(beta,kappa) (d^kappa D) d^(beta-kappa).
  friend WeylOperator operator*(const WeylOperator& a, const WeylOperator& b) {
    a.check(b);
    WeylOperator r(a.vars_ ? a.vars_ : b.vars_);
    const std::size_t n = r.nvars();
    for (const auto& [beta, C] : a.terms_)
      for (const auto& [gamma, D] : b.terms_) {
        Exponents kappa(n, 0);
        for (;;) {
          Rational binom(1);
          Poly dD = D;
          for (std::size_t i = 0; i < n && !dD.is_zero(); ++i)
            for (int k = 0; k < kappa[i]; ++k) {
              binom *= Rational(beta[i] - k, k + 1);
              dD = dD.diff(i);
            }
          if (!dD.is_zero()) {
            Exponents e(n);
            for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<std::uint8_t>(beta[i] - kappa[i] + gamma[i]);
            r.add(e, C * dD * binom);
          }
          std::size_t i = 0;
          while (i < n && kappa[i] == beta[i]) kappa[i++] = 0;
          if (i == n) break;
          ++kappa[i];
        }
      }
    return r;
  }
  WeylOperator& operator*=(const WeylOperator& o) { return *this = *this * o; }

  friend bool operator==(const WeylOperator& a, const WeylOperator& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [beta, c] : a.terms_) {
      auto it = b.terms_.find(beta);
      if (it == b.terms_.end() || !(it->second == c)) return false;
    }
    return true;
  }

  Poly apply(const Poly& f) const {
    Poly out(vars_);
    for (const auto& [beta, C] : terms_) {
      Poly df = f.lifted(vars_);
      for (std::size_t i = 0; i < beta.size() && !df.is_zero(); ++i)
        for (int k = 0; k < beta[i]; ++k) df = df.diff(i);
      if (!df.is_zero()) out += C * df;
    }
    return out;
  }

  template <class F>
  WeylOperator map_coefficients(F&& f) const {
    WeylOperator r(vars_);
    for (const auto& [b, c] : terms_) r.add(b, c.map_coefficients(f));
    return r;
  }

  /// nu -> -nu in every coefficient.
  WeylOperator reflect_nu() const {
    return map_coefficients([](const Scalar& s) { return s.reflect_nu(); });
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [beta, C] = *it;
      std::string d;
      for (std::size_t i = 0; i < beta.size(); ++i) {
        if (beta[i] == 0) continue;
        d += (d.empty() ? "" : "*") + ("d_" + vars_->name(i));
        if (beta[i] > 1) d += "^" + std::to_string(beta[i]);
      }
      if (!out.empty()) out += " + ";
      if (d.empty()) out += "(" + C.str() + ")";
      else if (C == Poly(Scalar(1))) out += d;
      else out += "(" + C.str() + ")*" + d;
    }
    return out;
  }

private:
  void check(const WeylOperator& o) const {
    if (vars_ && o.vars_ && vars_ != o.vars_ && !(*vars_ == *o.vars_))
      throw VarSetMismatch("operators live over different variable sets");
  }

  VarSetPtr vars_;
  Terms terms_;
};

inline WeylOperator commutator(const WeylOperator& a, const WeylOperator& b) { return a * b - b * a; }

/// Substitution homomorphism: x_i -> xs[i], d_i -> ds[i]. Each normal-ordered
/// word x^alpha d^beta maps to xs^alpha ds^beta with factor order kept.
inline WeylOperator algebra_map(const WeylOperator& D, const std::vector<WeylOperator>& xs,
                                const std::vector<WeylOperator>& ds, const VarSetPtr& target) {
  const std::size_t n = D.nvars();
  if (xs.size() != n || ds.size() != n) throw InvalidDimension("algebra_map needs one image per generator");
  std::vector<std::vector<WeylOperator>> xpow(n), dpow(n);
  auto power = [&](std::vector<std::vector<WeylOperator>>& cache, const std::vector<WeylOperator>& gens,
                   std::size_t i, int k) -> const WeylOperator& {
    auto& pw = cache[i];
    if (pw.empty()) pw.push_back(WeylOperator::identity(target));
    while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * gens[i]);
    return pw[k];
  };
  std::map<Exponents, WeylOperator> monomials;
  auto word = [&](std::vector<std::vector<WeylOperator>>& cache, const std::vector<WeylOperator>& gens,
                  const Exponents& e) {
    WeylOperator w = WeylOperator::identity(target);
    for (std::size_t i = 0; i < n; ++i)
      if (e[i]) w = w * power(cache, gens, i, e[i]);
    return w;
  };

  WeylOperator out(target);
  for (const auto& [beta, C] : D.terms()) {
    WeylOperator left(target);
    for (const auto& [alpha, c] : C.terms()) {
      auto it = monomials.find(alpha);
      if (it == monomials.end()) it = monomials.emplace(alpha, word(xpow, xs, alpha)).first;
      left += it->second * c;
    }
    out += left * word(dpow, ds, beta);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Moyal product over (l1..ln, lp1..lpn) with Lambda^{a,n+a} = 1 = -Lambda^{n+a,a}

/// u * v = sum_k nu^k/k! Lambda^{i1 j1}..Lambda^{ik jk} d_I u d_J v, summed over
/// ordered index tuples.
inline Poly moyal_star(const Poly& u, const Poly& v) {
  if (u.varset() && v.varset() && !(*u.varset() == *v.varset()))
    throw VarSetMismatch("Moyal product of polynomials over different variable sets");
  const VarSetPtr vs = u.varset() ? u.varset() : v.varset();
  if (!vs) return u * v;
  if (u.is_zero() || v.is_zero()) return Poly(vs);
  const std::size_t n = vs->size() / 2;
  const int kmax = std::min(u.degree(), v.degree());
  std::vector<Poly> level(kmax + 1, Poly(vs));

  std::function<void(const Poly&, const Poly&, int, int)> dfs = [&](const Poly& du, const Poly& dv, int depth,
                                                                    int sign) {
    level[depth] += (du * dv) * Rational(sign);
    if (depth == kmax) return;
    for (std::size_t a = 0; a < n; ++a) {
      const Poly ua = du.diff(a), upa = du.diff(n + a);
      if (!ua.is_zero()) {
        const Poly v2 = dv.diff(n + a);
        if (!v2.is_zero()) dfs(ua, v2, depth + 1, sign);
      }
      if (!upa.is_zero()) {
        const Poly v2 = dv.diff(a);
        if (!v2.is_zero()) dfs(upa, v2, depth + 1, -sign);
      }
    }
  };
  dfs(u.lifted(vs), v.lifted(vs), 0, 1);

  Poly out(vs);
  Rational factorial(1);
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) factorial *= Rational(k);
    out += level[k] * (Scalar::nu(k) * Scalar(Rational(1) / factorial));
  }
  return out;
}

/// Operator D with D(u) = lambda * u (left) or u * lambda (right).
/// Built level by level: C_{beta + e_{lp_a}} += d_{l_a} C_beta and
/// C_{beta + e_{l_a}} -= d_{lp_a} C_beta; level k carries (+-nu)^k / k!.
inline WeylOperator star_operator(const Poly& lambda, bool left, const VarSetPtr& vars) {
  const std::size_t n = vars->size() / 2;
  const Poly lam = lambda.lifted(vars);
  std::map<Exponents, Poly> level{{Exponents(2 * n, 0), lam}};
  WeylOperator out(vars);
  Rational factorial(1);
  const Scalar nu = left ? Scalar::nu(1) : -Scalar::nu(1);
  Scalar nu_k(1);
  for (int k = 0; !level.empty(); ++k) {
    if (k > 0) {
      factorial *= Rational(k);
      nu_k *= nu;
    }
    const Scalar w = nu_k * Scalar(Rational(1) / factorial);
    for (const auto& [beta, C] : level) out.add(beta, C * w);
    std::map<Exponents, Poly> next;
    for (const auto& [beta, C] : level)
      for (std::size_t a = 0; a < n; ++a) {
        const Poly ca = C.diff(a);
        if (!ca.is_zero()) {
          Exponents e = beta;
          ++e[n + a];
          auto [it, ins] = next.try_emplace(e, Poly(vars));
          it->second += ca;
        }
        const Poly cpa = C.diff(n + a);
        if (!cpa.is_zero()) {
          Exponents e = beta;
          ++e[a];
          auto [it, ins] = next.try_emplace(e, Poly(vars));
          it->second -= cpa;
        }
      }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    level = std::move(next);
  }
  return out;
}

inline WeylOperator left_star_operator(const Poly& lambda, const VarSetPtr& vars) {
  return star_operator(lambda, true, vars);
}
inline WeylOperator right_star_operator(const Poly& lambda, const VarSetPtr& vars) {
  return star_operator(lambda, false, vars);
}

// ---------------------------------------------------------------------------
// Fourier conjugation and the holomorphic frame

/// Variables l1..ln, eta1..etan.
inline VarSetPtr fourier_varset(std::size_t n) {
  auto names = VarSet::indexed("l", n);
  for (auto& s : VarSet::indexed("eta", n)) names.push_back(s);
  return make_varset(std::move(names));
}

/// Variables z1..zn, zb1..zbn.
inline VarSetPtr holomorphic_varset(std::size_t n) {
  auto names = VarSet::indexed("z", n);
  for (auto& s : VarSet::indexed("zb", n)) names.push_back(s);
  return make_varset(std::move(names));
}

/// Conjugation by the partial Fourier transform with kernel exp(-s i eta.l'):
/// l -> l, d_l -> d_l, l' -> s i d_eta, d_l' -> s i eta.
inline WeylOperator fourier_conjugate(const WeylOperator& D, int kernel_sign = 1) {
  const std::size_t n = D.nvars() / 2;
  const VarSetPtr t = fourier_varset(n);
  const Scalar si = kernel_sign > 0 ? Scalar::i() : -Scalar::i();
  std::vector<WeylOperator> xs, ds;
  for (std::size_t a = 0; a < n; ++a) {
    xs.push_back(WeylOperator::variable(t, a));
    ds.push_back(WeylOperator::derivative(t, a));
  }
  for (std::size_t a = 0; a < n; ++a) {
    xs.push_back(WeylOperator::derivative(t, n + a) * si);
    ds.push_back(WeylOperator::variable(t, n + a) * si);
  }
  return algebra_map(D, xs, ds, t);
}

/// z = l + i nu eta: l -> (z + zb)/2, eta -> (z - zb)/(2 i nu),
/// d_l -> d_z + d_zb, d_eta -> i nu (d_z - d_zb).
inline WeylOperator to_holomorphic_frame(const WeylOperator& D) {
  const std::size_t n = D.nvars() / 2;
  const VarSetPtr t = holomorphic_varset(n);
  const Scalar half(Rational(1, 2));
  const Scalar inv_2inu = Scalar::monomial(GaussianRational(Rational(0), Rational(-1, 2)), -1);
  const Scalar inu = Scalar::i() * Scalar::nu(1);
  std::vector<WeylOperator> xs(2 * n), ds(2 * n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto z = WeylOperator::variable(t, a), zb = WeylOperator::variable(t, n + a);
    const auto dz = WeylOperator::derivative(t, a), dzb = WeylOperator::derivative(t, n + a);
    xs[a] = (z + zb) * half;
    xs[n + a] = (z - zb) * inv_2inu;
    ds[a] = dz + dzb;
    ds[n + a] = (dz - dzb) * inu;
  }
  return algebra_map(D, xs, ds, t);
}

/// True when D involves neither zb multiplication nor d_zb.
inline bool is_holomorphic(const WeylOperator& D) {
  const std::size_t n = D.nvars() / 2;
  std::vector<std::size_t> zb;
  for (std::size_t a = 0; a < n; ++a) zb.push_back(n + a);
  for (const auto& [beta, C] : D.terms()) {
    for (std::size_t a = 0; a < n; ++a)
      if (beta[n + a]) return false;
    if (C.degree_in(zb) > 0) return false;
  }
  return true;
}

/// Restricts an operator over (z, zb) with no zb content to the variables z.
inline WeylOperator restrict_to_z(const WeylOperator& D, const VarSetPtr& zvars) {
  const std::size_t n = zvars->size();
  std::map<std::string, Poly> images;
  for (std::size_t a = 0; a < n; ++a) images.emplace(zvars->name(a), Poly::variable(zvars, a));
  WeylOperator out(zvars);
  for (const auto& [beta, C] : D.terms()) {
    for (std::size_t a = 0; a < n; ++a)
      if (beta[n + a]) throw ValidationFailed("operator has d_zb content");
    out.add(Exponents(beta.begin(), beta.begin() + static_cast<long>(n)), C.substitute(images, zvars));
  }
  return out;
}

}  // namespace jstar
