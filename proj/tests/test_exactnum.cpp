#include <random>

#include <gtest/gtest.h>

#include "jstar/exactnum.hpp"

using namespace jstar;

namespace {

Scalar nu(int k = 1) { return Scalar::nu(k); }

Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4), exp(-2, 2);
  Scalar s;
  for (int t = 0; t < 3; ++t)
    s.add_term(static_cast<int>(exp(rng)), GaussianRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))));
  return s;
}

}  // namespace

TEST(Rational, ParsesAndPrints) {
  EXPECT_EQ(Rational::parse("3"), Rational(3));
  EXPECT_EQ(Rational::parse("-6/4"), Rational(-3, 2));
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_EQ(Rational(-1, 2).str(), "-1/2");
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("abc"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) * Rational(2, 3), Rational(1, 3));
  EXPECT_EQ(Rational(1) / Rational(-3), Rational(-1, 3));
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
  EXPECT_EQ(pow(Rational(2), -2), Rational(1, 4));
}

TEST(GaussianRational, Field) {
  const GaussianRational i = GaussianRational::i();
  EXPECT_EQ(i * i, GaussianRational(-1));
  const GaussianRational z(Rational(1), Rational(2));
  EXPECT_EQ(z * z.inverse(), GaussianRational(1));
  EXPECT_EQ(z.norm2(), Rational(5));
  EXPECT_EQ(z.conj(), GaussianRational(Rational(1), Rational(-2)));
}

TEST(Scalar, LaurentProducts) {
  EXPECT_EQ((nu() + Scalar(1)) * (nu() - Scalar(1)), nu(2) - Scalar(1));
  EXPECT_EQ(nu() * nu(-1), Scalar(1));
  EXPECT_EQ(Scalar::monomial(GaussianRational(Rational(1, 2)), -1) * (Scalar(2) * nu(3)), nu(2));
}

TEST(Scalar, ExactDivision) {
  EXPECT_EQ((Scalar(2) * nu(2) + nu()).div_exact(nu()), Scalar(2) * nu() + Scalar(1));
  EXPECT_EQ((nu(2) - Scalar(1)).div_exact(nu() - Scalar(1)), nu() + Scalar(1));
  EXPECT_THROW(Scalar(1).div_exact(nu() + Scalar(1)), NotDivisible);
  EXPECT_THROW(Scalar(1).div_exact(Scalar()), NotDivisible);
  EXPECT_EQ(Scalar().div_exact(nu()), Scalar());
  // shifted long division with negative exponents
  const Scalar a = nu(-2) + nu(-1) * Scalar(3) + Scalar(2);  // (1 + nu)(1 + 2 nu) nu^-2
  EXPECT_EQ(a.div_exact(nu() + Scalar(1)), nu(-2) + Scalar(2) * nu(-1));
}

TEST(Scalar, RingAxiomsRandomized) {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + (-a), Scalar());
    if (!b.is_zero()) {
      EXPECT_EQ((a * b).div_exact(b), a);
    }
  }
}

TEST(Scalar, ReflectAndEvaluate) {
  const Scalar s = nu(-1) + Scalar(Rational(1, 2));
  EXPECT_EQ(s.reflect_nu(), Scalar(Rational(1, 2)) - nu(-1));
  EXPECT_EQ(s.evaluate(Rational(-2)), GaussianRational(0));
  EXPECT_EQ((Scalar::i() * nu()).conj(), -(Scalar::i() * nu()));
}

TEST(Scalar, CanonicalText) {
  EXPECT_EQ((Scalar(2) * nu() + Scalar(1)).str(), "2ν + 1");
  EXPECT_EQ((nu(-1) + Scalar(Rational(1, 2))).str(), "1/2 + ν^-1");
  EXPECT_EQ(Scalar().str(), "0");
  EXPECT_EQ((-nu(2)).str(), "-ν^2");
}
