#include <random>

#include <gtest/gtest.h>

#include "jstar/starrep.hpp"

using namespace jstar;

namespace {

const Scalar nu = Scalar::nu(1);

}  // namespace

TEST(Weyl, CanonicalCommutation) {
  const auto vs = make_varset({"x"});
  const auto x = WeylOperator::variable(vs, 0), d = WeylOperator::derivative(vs, 0);
  EXPECT_EQ(d * x, x * d + WeylOperator::identity(vs));
  EXPECT_EQ(commutator(d, x), WeylOperator::identity(vs));
  const auto xd = x * d;
  EXPECT_EQ(xd * xd, x * x * d * d + xd);
  EXPECT_EQ((d * d).order(), 2);
}

TEST(Weyl, CompositionMatchesApplication) {
  const auto vs = make_varset({"a", "b"});
  std::mt19937 rng(7);
  for (int t = 0; t < 10; ++t) {
    WeylOperator P(vs), Q(vs);
    for (std::size_t i = 0; i < 2; ++i) {
      P += WeylOperator::multiplication(random_poly(vs, 2, rng, 0.5)) * WeylOperator::derivative(vs, i);
      Q += WeylOperator::multiplication(random_poly(vs, 2, rng, 0.5)) * WeylOperator::derivative(vs, i) *
           WeylOperator::derivative(vs, 1 - i);
    }
    P += WeylOperator::multiplication(random_poly(vs, 2, rng));
    const Poly f = random_poly(vs, 4, rng, 0.4);
    EXPECT_EQ((P * Q).apply(f), P.apply(Q.apply(f)));
    EXPECT_EQ((Q * P).apply(f), Q.apply(P.apply(f)));
  }
}

TEST(Weyl, MoyalBasics) {
  const auto vs = chart_varset(1);
  const Poly l = Poly::variable(vs, "l1"), lp = Poly::variable(vs, "lp1");
  EXPECT_EQ(moyal_star(l, lp), l * lp + Poly::constant(vs, nu));
  EXPECT_EQ(moyal_star(lp, l), l * lp - Poly::constant(vs, nu));
  EXPECT_EQ(moyal_star(l, l), l * l);
  EXPECT_TRUE(moyal_star(Poly(vs), l).is_zero());
  // l' * l^2 = l^2 l' - 2 nu l
  EXPECT_EQ(moyal_star(lp, l * l), l * l * lp - l * (Scalar(2) * nu));
}

TEST(Weyl, StarOperators) {
  const auto vs = chart_varset(1);
  const Poly l = Poly::variable(vs, "l1");
  const auto L = left_star_operator(l, vs);
  EXPECT_EQ(L, WeylOperator::variable(vs, 0) + WeylOperator::derivative(vs, 1) * nu);
  const auto R = right_star_operator(l, vs);
  EXPECT_EQ(R, WeylOperator::variable(vs, 0) - WeylOperator::derivative(vs, 1) * nu);

  std::mt19937 rng(3);
  const auto vs2 = chart_varset(2);
  for (int t = 0; t < 5; ++t) {
    const Poly lam = random_poly(vs2, 3, rng, 0.3);
    const Poly f = random_poly(vs2, 3, rng, 0.3);
    EXPECT_EQ(left_star_operator(lam, vs2).apply(f), moyal_star(lam, f));
    EXPECT_EQ(right_star_operator(lam, vs2).apply(f), moyal_star(f, lam));
  }
}

TEST(Weyl, AlgebraMapKeepsOrder) {
  const auto vs = make_varset({"x"});
  const auto x = WeylOperator::variable(vs, 0), d = WeylOperator::derivative(vs, 0);
  // x -> d, d -> -x is an automorphism of the Weyl algebra
  const auto img = algebra_map(x * d, {d}, {-x}, vs);
  EXPECT_EQ(img, -(d * x));
}

TEST(Weyl, FourierConjugationOfGenerators) {
  const auto vs = chart_varset(1);
  const auto fv = fourier_varset(1);
  EXPECT_EQ(fv->names(), (std::vector<std::string>{"l1", "eta1"}));
  const Scalar i = Scalar::i();
  const auto lp = WeylOperator::variable(vs, 1), dlp = WeylOperator::derivative(vs, 1);
  EXPECT_EQ(fourier_conjugate(lp, 1), WeylOperator::derivative(fv, 1) * i);
  EXPECT_EQ(fourier_conjugate(dlp, 1), WeylOperator::variable(fv, 1) * i);
  EXPECT_EQ(fourier_conjugate(lp, -1), WeylOperator::derivative(fv, 1) * (-i));
  EXPECT_EQ(fourier_conjugate(WeylOperator::variable(vs, 0)), WeylOperator::variable(fv, 0));
  // conjugation preserves the commutation relation
  EXPECT_EQ(commutator(fourier_conjugate(dlp), fourier_conjugate(lp)), WeylOperator::identity(fv));
}

TEST(Weyl, HolomorphicFrame) {
  const auto hv = holomorphic_varset(1);
  EXPECT_EQ(hv->names(), (std::vector<std::string>{"z1", "zb1"}));
  const auto fv = fourier_varset(1);
  const auto H = to_holomorphic_frame(WeylOperator::derivative(fv, 0));
  EXPECT_FALSE(is_holomorphic(to_holomorphic_frame(WeylOperator::variable(fv, 1))));
  // d/dl is d/dz + d/dzb
  EXPECT_EQ(H, WeylOperator::derivative(hv, 0) + WeylOperator::derivative(hv, 1));
  // l + nu d_l' conjugates to multiplication by z
  const auto vs = chart_varset(1);
  const auto D = to_holomorphic_frame(fourier_conjugate(left_star_operator(Poly::variable(vs, "l1"), vs)));
  ASSERT_TRUE(is_holomorphic(D));
  const auto zv = z_varset(1);
  EXPECT_EQ(restrict_to_z(D, zv), WeylOperator::variable(zv, 0));
}
