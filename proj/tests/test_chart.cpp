#include <gtest/gtest.h>

#include "jstar/chart.hpp"

using namespace jstar;

namespace {

std::shared_ptr<const GradedLieAlgebra> lie(const JordanAlgebra& A, long mu = 1) {
  return std::make_shared<const GradedLieAlgebra>(build_kkt(A, Rational(mu)));
}

}  // namespace

TEST(Chart, Varset) {
  EXPECT_EQ(chart_varset(2)->names(), (std::vector<std::string>{"l1", "l2", "lp1", "lp2"}));
}

TEST(Chart, PoissonCanonical) {
  const auto vs = chart_varset(1);
  const Poly l = Poly::variable(vs, "l1"), lp = Poly::variable(vs, "lp1");
  EXPECT_EQ(poisson(l, lp), Poly::constant(vs, Scalar(1)));
  EXPECT_EQ(poisson(lp, l), Poly::constant(vs, Scalar(-1)));
  EXPECT_EQ(poisson(l * l, lp), l * Rational(2));
}

TEST(Chart, Sl2MomentMaps) {
  const auto ctx = build_chart(lie(make_rank_one()));
  const auto& vs = ctx.vars;
  const Poly l = Poly::variable(vs, "l1"), lp = Poly::variable(vs, "lp1");
  EXPECT_EQ(ctx.lambda[0], lp);
  EXPECT_EQ(ctx.lambda[1], l * lp + Poly::constant(vs, Scalar(2)));
  EXPECT_EQ(ctx.lambda[2], l * l * lp + l * Rational(4));
  EXPECT_EQ(moment_map(ctx, ctx.g->grading_element), ctx.lambda[1]);
}

TEST(Chart, Sl2PoissonMatchesBracket) {
  const auto ctx = build_chart(lie(make_rank_one()));
  // [u, v] = -2 h
  EXPECT_EQ(poisson(ctx.lambda[0], ctx.lambda[2]), ctx.lambda[1] * Rational(-2));
}

TEST(Chart, StronglyHamiltonian) {
  for (const auto& A : {make_rank_one(), make_spin_factor(3), make_sym_matrices(2)}) {
    const auto ctx = build_chart(lie(A, 2));
    const ChartReport r = verify_strongly_hamiltonian(ctx);
    EXPECT_TRUE(r.checks.passed()) << A.name;
    EXPECT_LE(r.max_degree, 3);
    EXPECT_EQ(ctx.lambda.size(), ctx.g->dim);
  }
}

TEST(Chart, PerturbationLeavesResidual) {
  const auto g = build_kkt(make_rank_one(), Rational(1));
  const auto bad = std::make_shared<const GradedLieAlgebra>(
      perturb_structure_constant(g, g.l_index(0), g.lp_index(0), g.l_index(0), Rational(1)));
  const ChartReport r = verify_strongly_hamiltonian(build_chart(bad));
  EXPECT_FALSE(r.checks.passed());
}
