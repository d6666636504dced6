#pragma once

// Exact scalars: arbitrary-precision rationals, Gaussian rationals and
// Laurent polynomials in the formal deformation parameter nu.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "jstar/error.hpp"

namespace jstar {

class Rational {
public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Accepts "p", "p/q" and "-p/q".
  static Rational parse(std::string_view text) {
    mpq_class q;
    std::string s(text);
    if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
      throw ParseError("not a rational: '" + s + "'");
    q.canonicalize();
    return Rational(std::move(q));
  }

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p/q", or "p" when the denominator is one.
  std::string str() const { return v_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  mpq_class v_;
};

inline Rational pow(const Rational& base, int e) {
  Rational result(1);
  Rational b = e < 0 ? Rational(1) / base : base;
  for (int k = 0; k < (e < 0 ? -e : e); ++k) result *= b;
  return result;
}

/// a + b i with rational a, b.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long re) : re_(re) {}                 // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm2() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const {
    Rational d = norm2();
    if (d.is_zero()) throw std::domain_error("GaussianRational: inverse of zero");
    return {re_ / d, -im_ / d};
  }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
  GaussianRational& operator-=(const GaussianRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// "3/2", "-i", "1/2+3i", "(1-i)"-free plain form; parentheses are left to callers.
  std::string str() const {
    if (im_.is_zero()) return re_.str();
    std::string imag;
    if (im_ == Rational(1)) imag = "i";
    else if (im_ == Rational(-1)) imag = "-i";
    else imag = im_.str() + "i";
    if (re_.is_zero()) return imag;
    return re_.str() + (im_.sign() > 0 ? "+" : "") + imag;
  }
  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.str(); }

private:
  Rational re_;
  Rational im_;
};

/// Finite Laurent polynomial sum_k c_k nu^k with Gaussian-rational
/// coefficients. No zero coefficient is ever stored.
class Scalar {
public:
  using Terms = std::map<int, GaussianRational>;

  Scalar() = default;
  Scalar(long c) : Scalar(GaussianRational(c)) {}                 // NOLINT(google-explicit-constructor)
  Scalar(const Rational& c) : Scalar(GaussianRational(c)) {}      // NOLINT(google-explicit-constructor)
  Scalar(const GaussianRational& c) { add_term(0, c); }           // NOLINT(google-explicit-constructor)

  static Scalar monomial(const GaussianRational& c, int exponent) {
    Scalar s;
    s.add_term(exponent, c);
    return s;
  }
  static Scalar nu(int exponent = 1) { return monomial(GaussianRational(1), exponent); }
  static Scalar i() { return Scalar(GaussianRational::i()); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  int min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  GaussianRational coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? GaussianRational() : it->second;
  }
  /// Constant coefficient; throws unless the scalar has no nu-dependence.
  GaussianRational as_constant() const {
    if (!is_constant()) throw std::domain_error("Scalar: not a constant: " + str());
    return coefficient(0);
  }

  void add_term(int exponent, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Scalar operator-() const {
    Scalar r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
  }
  Scalar& operator+=(const Scalar& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
    return r;
  }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

  /// Exact quotient in the Laurent ring. Since nu is a unit, a/b exists iff
  /// the nu-free parts divide as ordinary polynomials.
  Scalar div_exact(const Scalar& divisor) const {
    if (divisor.is_zero()) throw NotDivisible("division by zero");
    if (is_zero()) return {};
    if (divisor.is_monomial()) {
      const auto& [kb, cb] = *divisor.terms_.begin();
      GaussianRational inv = cb.inverse();
      Scalar r;
      for (const auto& [k, c] : terms_) r.terms_.emplace(k - kb, c * inv);
      return r;
    }
    // Polynomial long division on shifted copies (exponents >= 0).
    const int shift_b = divisor.min_exponent();
    const int shift_a = min_exponent();
    std::map<int, GaussianRational> rem;
    for (const auto& [k, c] : terms_) rem.emplace(k - shift_a, c);
    std::map<int, GaussianRational> den;
    for (const auto& [k, c] : divisor.terms_) den.emplace(k - shift_b, c);
    const int deg_b = den.rbegin()->first;
    const GaussianRational lead_inv = den.rbegin()->second.inverse();
    Scalar quotient;
    while (!rem.empty() && rem.rbegin()->first >= deg_b) {
      const int deg = rem.rbegin()->first;
      GaussianRational q = rem.rbegin()->second * lead_inv;
      quotient.add_term(deg - deg_b + shift_a - shift_b, q);
      for (const auto& [k, c] : den) {
        auto [it, inserted] = rem.try_emplace(k + deg - deg_b, -(c * q));
        if (!inserted) {
          it->second -= c * q;
          if (it->second.is_zero()) rem.erase(it);
        }
      }
    }
    if (!rem.empty())
      throw NotDivisible("(" + str() + ") / (" + divisor.str() + ")");
    return quotient;
  }

  /// The ring involution nu -> -nu.
  Scalar reflect_nu() const {
    Scalar r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, (k % 2 == 0) ? c : -c);
    return r;
  }

  /// Complex conjugation of every coefficient (nu stays formal and real).
  Scalar conj() const {
    Scalar r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c.conj());
    return r;
  }

  GaussianRational evaluate(const Rational& nu_value) const {
    GaussianRational sum;
    for (const auto& [k, c] : terms_) {
      if (k < 0 && nu_value.is_zero()) throw std::domain_error("Scalar: negative power of nu at nu = 0");
      sum += c * GaussianRational(pow(nu_value, k));
    }
    return sum;
  }

  /// Descending powers of nu, e.g. "2ν + 1", "ν^-1 + 1/2", "(1+i)ν^2".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const int k = it->first;
      GaussianRational c = it->second;
      bool negative = c.is_real() ? c.re().sign() < 0 : (c.re().is_zero() && c.im().sign() < 0);
      if (negative) c = -c;
      if (first) os << (negative ? "-" : "");
      else os << (negative ? " - " : " + ");
      first = false;
      const bool unit = c == GaussianRational(1);
      const bool compound = !c.is_real() && !c.re().is_zero();
      if (k == 0) {
        os << c.str();
      } else {
        if (!unit) os << (compound ? "(" + c.str() + ")" : c.str());
        os << "ν";
        if (k != 1) os << "^" << k;
      }
    }
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

private:
  Terms terms_;
};

} // namespace jstar
