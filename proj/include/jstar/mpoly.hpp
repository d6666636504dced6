#pragma once

// Multivariate polynomials over Scalar in an ordered set of named variables.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "jstar/exactnum.hpp"

namespace jstar {

/// Ordered, duplicate-free list of variable names. The order is the index
/// used by exponent vectors and by the symplectic pairing of the Weyl algebra.
class VarSet {
public:
  explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    std::vector<std::string> sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidDimension("duplicate variable name in VarSet");
  }

  /// prefix1..prefixN followed by prefix2_1..; e.g. indexed("z", 3) = z1 z2 z3.
  static std::vector<std::string> indexed(const std::string& prefix, std::size_t count) {
    std::vector<std::string> out;
    for (std::size_t a = 0; a < count; ++a) out.push_back(prefix + std::to_string(a + 1));
    return out;
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::size_t index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw UnknownVariable(name);
    return static_cast<std::size_t>(it - names_.begin());
  }
  bool contains(const std::string& name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
  }

  friend bool operator==(const VarSet& a, const VarSet& b) { return a.names_ == b.names_; }

private:
  std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

inline VarSetPtr make_varset(std::vector<std::string> names) {
  return std::make_shared<const VarSet>(std::move(names));
}

using Exponents = std::vector<std::uint8_t>;

/// Sparse polynomial with Scalar coefficients. A polynomial without a
/// VarSet is a constant; it adopts the VarSet of whatever it is combined with.
class Poly {
public:
  using Terms = std::map<Exponents, Scalar>;

  Poly() = default;
  Poly(const Scalar& c) { add_term({}, c); }     // NOLINT(google-explicit-constructor)
  Poly(const Rational& c) : Poly(Scalar(c)) {}   // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Scalar(c)) {}              // NOLINT(google-explicit-constructor)
  explicit Poly(VarSetPtr vars) : vars_(std::move(vars)) {}

  static Poly constant(VarSetPtr vars, const Scalar& c) {
    Poly p(std::move(vars));
    p.add_term(Exponents(p.nvars(), 0), c);
    return p;
  }
  static Poly variable(VarSetPtr vars, std::size_t index) {
    Poly p(std::move(vars));
    Exponents e(p.nvars(), 0);
    e.at(index) = 1;
    p.add_term(e, Scalar(1));
    return p;
  }
  static Poly variable(const VarSetPtr& vars, const std::string& name) {
    return variable(vars, vars->index_of(name));
  }
  static Poly monomial(VarSetPtr vars, Exponents e, const Scalar& c) {
    Poly p(std::move(vars));
    if (e.size() != p.nvars()) throw InvalidDimension("exponent length does not match VarSet");
    p.add_term(std::move(e), c);
    return p;
  }

  const VarSetPtr& varset() const { return vars_; }
  std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
      return std::all_of(t.first.begin(), t.first.end(), [](std::uint8_t e) { return e == 0; });
    });
  }
  Scalar constant_term() const {
    for (const auto& [e, c] : terms_)
      if (std::all_of(e.begin(), e.end(), [](std::uint8_t x) { return x == 0; })) return c;
    return {};
  }
  Scalar coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar() : it->second;
  }

  void add_term(Exponents e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
  }
  /// Total degree in the listed variable indices; -1 for the zero polynomial.
  int degree_in(std::span<const std::size_t> indices) const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (std::size_t i : indices) s += i < e.size() ? e[i] : 0;
      d = std::max(d, s);
    }
    return d;
  }

  /// Re-expresses a VarSet-less constant over `vars`.
  Poly lifted(const VarSetPtr& vars) const {
    if (vars_ || !vars) return *this;
    Poly p(vars);
    for (const auto& [e, c] : terms_) p.add_term(Exponents(vars->size(), 0), c);
    return p;
  }

  Poly operator-() const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  Poly& operator+=(const Poly& o) { return accumulate(o, false); }
  Poly& operator-=(const Poly& o) { return accumulate(o, true); }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    VarSetPtr vs = unify(a, b);
    const Poly la = a.lifted(vs);
    const Poly lb = b.lifted(vs);
    Poly r(vs);
    Exponents e(vs ? vs->size() : 0);
    for (const auto& [ea, ca] : la.terms_)
      for (const auto& [eb, cb] : lb.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
        r.add_term(e, ca * cb);
      }
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator*(const Poly& a, const Scalar& s) {
    Poly r(a.vars_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : a.terms_) r.add_term(e, c * s);
    return r;
  }
  friend Poly operator*(const Scalar& s, const Poly& a) { return a * s; }
  friend Poly operator*(const Poly& a, const Rational& s) { return a * Scalar(s); }
  friend Poly operator*(const Rational& s, const Poly& a) { return a * Scalar(s); }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.empty() || b.terms_.empty()) return a.terms_.empty() && b.terms_.empty();
    VarSetPtr vs = unify(a, b);
    return a.lifted(vs).terms_ == b.lifted(vs).terms_;
  }

  Poly diff(std::size_t index) const {
    if (index >= nvars()) throw UnknownVariable("index " + std::to_string(index));
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[index] == 0) continue;
      Exponents f = e;
      --f[index];
      r.add_term(std::move(f), c * Scalar(static_cast<long>(e[index])));
    }
    return r;
  }
  Poly diff(const std::string& name) const {
    if (!vars_) throw UnknownVariable(name);
    return diff(vars_->index_of(name));
  }

  /// Replaces every variable by the polynomial assigned to it. Variables
  /// absent from `images` must not occur in the polynomial.
  Poly substitute(const std::map<std::string, Poly>& images, const VarSetPtr& target) const {
    Poly result(target);
    std::vector<const Poly*> image(nvars(), nullptr);
    for (std::size_t i = 0; i < nvars(); ++i) {
      auto it = images.find(vars_->name(i));
      if (it != images.end()) image[i] = &it->second;
    }
    std::vector<std::vector<Poly>> powers(nvars());
    for (const auto& [e, c] : terms_) {
      Poly term = Poly::constant(target, c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!image[i]) throw UnknownVariable(vars_->name(i) + " has no substitution");
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(Poly::constant(target, Scalar(1)));
        while (pw.size() <= e[i]) pw.push_back(pw.back() * image[i]->lifted(target));
        term *= pw[e[i]];
      }
      result += term;
    }
    return result;
  }

  /// Applies f to every coefficient, dropping zeros.
  template <class F>
  Poly map_coefficients(F&& f) const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      if (!first) os << " + ";
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_->name(i);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) os << c.str();
      else if (c == Scalar(1)) os << mono;
      else os << "(" << c.str() << ")*" << mono;
    }
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

private:
  static VarSetPtr unify(const Poly& a, const Poly& b) {
    if (!a.vars_) return b.vars_;
    if (!b.vars_) return a.vars_;
    if (a.vars_ != b.vars_ && !(*a.vars_ == *b.vars_))
      throw VarSetMismatch("polynomials live over different variable sets");
    return a.vars_;
  }

  Poly& accumulate(const Poly& o, bool negate) {
    VarSetPtr vs = unify(*this, o);
    if (vs && !vars_) *this = lifted(vs);
    const Poly lo = o.lifted(vs);
    for (const auto& [e, c] : lo.terms_) add_term(e, negate ? -c : c);
    return *this;
  }

  VarSetPtr vars_;
  Terms terms_;
};

/// Formal partial derivative by name.
inline Poly poly_diff(const Poly& p, const std::string& var) { return p.diff(var); }

inline Poly poly_substitute(const Poly& p, const std::map<std::string, Poly>& images,
                            const VarSetPtr& target) {
  return p.substitute(images, target);
}

} // namespace jstar
