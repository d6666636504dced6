#include <gtest/gtest.h>

#include "jstar/starrep.hpp"

using namespace jstar;

namespace {

struct Sl2 {
  std::shared_ptr<const GradedLieAlgebra> g;
  ChartContext ctx;
  StarRepresentation s;
  VarSetPtr zv;
  WeylOperator z, d;

  explicit Sl2(long mu = 1) {
    g = std::make_shared<const GradedLieAlgebra>(build_kkt(make_rank_one(), Rational(mu)));
    ctx = build_chart(g);
    s = build_star_representation(g, ctx.basis);
    zv = s.zvars;
    z = WeylOperator::variable(zv, 0);
    d = WeylOperator::derivative(zv, 0);
  }
  WeylOperator scalar(const Scalar& c) const { return WeylOperator::scalar(zv, c); }
};

Scalar laurent(Rational c0, Rational cm1) { return Scalar(c0) + Scalar::monomial(GaussianRational(cm1), -1); }

}  // namespace

TEST(StarRep, Sl2Operators) {
  const Sl2 t;
  EXPECT_EQ(t.s.rho[0], t.d);
  EXPECT_EQ(t.s.rho[1], t.z * t.d + t.scalar(laurent(Rational(1, 2), Rational(1))));
  EXPECT_EQ(t.s.rho[2], t.z * t.z * t.d + t.z * laurent(Rational(1), Rational(2)));
}

TEST(StarRep, ScalarPartScalesWithMu) {
  const Sl2 t(-3);
  EXPECT_EQ(t.s.tau[1].constant_term(), laurent(Rational(1, 2), Rational(-3)));
}

TEST(StarRep, AntiHomomorphism) {
  for (const auto& A : {make_rank_one(), make_spin_factor(3), make_sym_matrices(2)}) {
    const auto g = std::make_shared<const GradedLieAlgebra>(build_kkt(A, Rational(1)));
    const auto s = build_star_representation(g, symplectic_basis(*g));
    const HomomorphismResult r = verify_rho_homomorphism(s);
    EXPECT_EQ(r.sign, -1) << A.name << ": " << r.detail;
  }
}

TEST(StarRep, KappaH) {
  for (const auto& A : {make_rank_one(), make_sym_matrices(2)}) {
    const auto g = std::make_shared<const GradedLieAlgebra>(build_kkt(A, Rational(1)));
    const KappaH k = measure_kappa_h(build_star_representation(g, symplectic_basis(*g)));
    ASSERT_TRUE(k.defined) << k.detail;
    EXPECT_EQ(k.value, Rational(1));
  }
}

TEST(StarRep, StarSuiteOnSl2) {
  const Sl2 t;
  const StarReport r = verify_star_suite(t.ctx, 5);
  EXPECT_TRUE(r.checks.passed());
  EXPECT_EQ(r.N, 3);
  EXPECT_EQ(r.associativity_trials, 5);
}

TEST(StarRep, TruncationHelpers) {
  const auto vs = chart_varset(1);
  const Poly p = Poly::constant(vs, Scalar(2) + Scalar::nu(1) * Scalar(3) + Scalar::nu(2));
  EXPECT_EQ(truncate_nu(p, 1), Poly::constant(vs, Scalar(2)));
  EXPECT_EQ(nu_coefficient(p, 1), Poly::constant(vs, Scalar(3)));
}

// The conjugated left-star operators reproduce rho^ only after nu -> -nu and
// an overall sign; the right-star route with the opposite kernel is exact.
TEST(StarRep, FourierRoutes) {
  const Sl2 t;
  const FourierIdentityReport r = verify_fourier_identity(t.ctx, t.s);
  EXPECT_TRUE(r.literal_holomorphic);
  EXPECT_EQ(r.literal_relation, "negated_nu_reflected");
  EXPECT_TRUE(r.right_route_exact);
  EXPECT_TRUE(r.right_route_holomorphic);
  EXPECT_FALSE(r.polynomial_level_exact);
  ASSERT_EQ(r.literal.size(), 3u);
  EXPECT_EQ(r.literal[0], -t.d);
  EXPECT_EQ(r.literal[1], -(t.z * t.d) + t.scalar(laurent(Rational(-1, 2), Rational(1))));
  EXPECT_EQ(r.literal[2], -(t.z * t.z * t.d) + t.z * laurent(Rational(-1), Rational(2)));
}
