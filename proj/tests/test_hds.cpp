#include <gtest/gtest.h>

#include "jstar/hds.hpp"

using namespace jstar;

namespace {

struct Instance {
  std::shared_ptr<const GradedLieAlgebra> g;
  StarRepresentation s;

  Instance(const JordanAlgebra& A, long mu) {
    g = std::make_shared<const GradedLieAlgebra>(build_kkt(A, Rational(mu)));
    s = build_star_representation(g, symplectic_basis(*g));
  }
};

Scalar laurent(Rational c0, Rational cm1) { return Scalar(c0) + Scalar::monomial(GaussianRational(cm1), -1); }

}  // namespace

TEST(Hds, RankOneOperators) {
  const auto g = build_kkt(make_rank_one(), Rational(1));
  const auto zv = z_varset(1);
  const auto z = WeylOperator::variable(zv, 0), d = WeylOperator::derivative(zv, 0);
  const Scalar m = Scalar(Rational(5, 3));
  EXPECT_EQ(dpi(g, zv, basis_coords(g, 2)).at(m), -(z * z * d) - z * (Scalar(2) * m));
  EXPECT_EQ(dpi(g, zv, basis_coords(g, 1)).at(m), -(z * d) - WeylOperator::scalar(zv, m));
  EXPECT_EQ(dpi(g, zv, basis_coords(g, 0)).at(m), -d);
}

TEST(Hds, IdentityActsByRank) {
  const auto g = build_kkt(make_sym_matrices(2), Rational(1));
  const auto zv = z_varset(g.n);
  const HdsOperator op = dpi(g, zv, g.grading_element);
  EXPECT_EQ(op.S1, WeylOperator::scalar(zv, Scalar(-2)));
}

TEST(Hds, Homomorphism) {
  for (const auto& A : {make_rank_one(), make_spin_factor(3), make_sym_matrices(2)}) {
    const auto g = build_kkt(A, Rational(1));
    const HomomorphismResult r = verify_dpi_homomorphism(g, z_varset(g.n));
    EXPECT_EQ(r.sign, 1) << A.name << ": " << r.detail;
  }
}

TEST(Hds, TubeIdentities) {
  const Instance t(make_spin_factor(3), 1);
  const CheckList c = verify_tube_identities(t.s);
  EXPECT_TRUE(c.passed());
}

TEST(Hds, RankOneEquivalence) {
  struct Case {
    long mu;
    Scalar m;
  };
  for (const Case& c : {Case{1, laurent(Rational(1, 2), Rational(1))}, Case{2, laurent(Rational(1, 2), Rational(2))},
                        Case{-3, laurent(Rational(1, 2), Rational(-3))}}) {
    const Instance t(make_rank_one(), c.mu);
    const Equivalence e = solve_equivalence(*t.g, t.s.rho, t.s.zvars);
    ASSERT_TRUE(e.found) << e.residual;
    EXPECT_EQ(e.alpha, Alpha::minus_id);
    EXPECT_EQ(e.m_star, c.m);
    // twice the closed-form value, traced to -2 s_alpha kappa_h
    const TheoremComparison cmp = compare_with_theorem(*t.g, e, measure_kappa_h(t.s));
    EXPECT_EQ(cmp.match, "proportional");
    ASSERT_TRUE(cmp.factor && cmp.predicted_factor);
    EXPECT_EQ(*cmp.factor, Rational(2));
    EXPECT_EQ(*cmp.predicted_factor, Rational(2));
  }
}

TEST(Hds, HigherRankEquivalence) {
  for (const auto& A : {make_spin_factor(3), make_sym_matrices(2)}) {
    const Instance t(A, 1);
    const Equivalence e = solve_equivalence_or_throw(*t.g, t.s.rho, t.s.zvars);
    EXPECT_EQ(e.alpha, Alpha::minus_id);
    EXPECT_EQ(e.m_star, laurent(Rational(3, 4), Rational(3, 2))) << A.name;
    EXPECT_EQ(m_formula(*t.g) * Scalar(2), e.m_star);
  }
}

TEST(Hds, PerturbedScalarHasNoEquivalence) {
  const Instance t(make_rank_one(), 1);
  auto rho = t.s.rho;
  rho[1] += WeylOperator::identity(t.s.zvars);
  EXPECT_FALSE(solve_equivalence(*t.g, rho, t.s.zvars).found);
  EXPECT_THROW(solve_equivalence_or_throw(*t.g, rho, t.s.zvars), NoEquivalence);
}

TEST(Hds, Substitution) {
  struct Case {
    long mu;
    long nu0;
  };
  for (const Case& c : {Case{1, -2}, Case{2, -4}, Case{-3, 6}}) {
    const Instance t(make_rank_one(), c.mu);
    const Equivalence e = solve_equivalence(*t.g, t.s.rho, t.s.zvars);
    const RemarkReport r = remark_substitution(*t.g, e, t.s.rho);
    EXPECT_EQ(r.nu0, Rational(c.nu0));
    EXPECT_TRUE(r.numerator_at_nu0.is_zero());
    EXPECT_EQ(r.m_star_at_nu0, GaussianRational(Rational(0)));
    EXPECT_EQ(r.m_formula_at_nu0, GaussianRational(Rational(0)));
    EXPECT_EQ(r.tau_E_at_nu0, GaussianRational(Rational(0)));
  }
}
