#include <cstdio>
#include <fstream>

#include <gtest/gtest.h>

#include "jstar/pipeline.hpp"

using namespace jstar;

TEST(Io, ScalarRoundTrip) {
  const Scalar s = Scalar(Rational(-7, 3)) + Scalar::nu(2) * Scalar::i() + Scalar::monomial(GaussianRational(Rational(1, 2)), -1);
  EXPECT_EQ(scalar_from_json(to_json(s)), s);
  EXPECT_EQ(rational_from_json(json("-4/6")), Rational(-2, 3));
  EXPECT_EQ(rational_from_json(json(5)), Rational(5));
  EXPECT_THROW(rational_from_json(json(0.5)), ParseError);
}

TEST(Io, PolyAndOperatorRoundTrip) {
  const auto vs = make_varset({"z1", "z2"});
  const Poly p = Poly::variable(vs, 0) * Poly::variable(vs, 1) * Scalar::nu(-1) + Poly::constant(vs, Scalar(3));
  EXPECT_EQ(poly_from_json(to_json(p)), p);
  const auto D = WeylOperator::multiplication(p) * WeylOperator::derivative(vs, 1) + WeylOperator::variable(vs, 0);
  EXPECT_EQ(weyl_from_json(to_json(D)), D);
  const json bad = {{"vars", {"x"}}, {"terms", {{{"exponents", {1, 2}}, {"coefficient", json::array()}}}}};
  EXPECT_THROW(poly_from_json(bad), ParseError);
}

TEST(Io, AlgebraRoundTrip) {
  const auto A = make_sym_matrices(2);
  const auto B = load_from_structure_constants(jordan_from_json(to_json(A)));
  EXPECT_EQ(B.structure, A.structure);
  EXPECT_EQ(B.unit, A.unit);
  EXPECT_EQ(B.rank, A.rank);
  EXPECT_THROW(jordan_from_json(json{{"dim", 1}}), ParseError);
}

TEST(Io, AlgebraFromFile) {
  const std::string path = ::testing::TempDir() + "jstar_spin3.json";
  {
    std::ofstream out(path);
    out << to_json(make_spin_factor(3)).dump();
  }
  const auto A = algebra_from_selector("file:" + path);
  EXPECT_EQ(A.dim, 3u);
  EXPECT_EQ(A.rank, 2u);
  std::remove(path.c_str());
  EXPECT_THROW(algebra_from_selector("file:/nonexistent/x.json"), ParseError);
}

TEST(Io, Selectors) {
  EXPECT_EQ(algebra_from_selector("rank1").dim, 1u);
  EXPECT_EQ(algebra_from_selector("spin:4").dim, 4u);
  EXPECT_EQ(algebra_from_selector("sym:3").dim, 6u);
  EXPECT_THROW(algebra_from_selector("sym:x"), ParseError);
  EXPECT_THROW(algebra_from_selector("octonions"), ParseError);
  EXPECT_THROW(algebra_from_selector("spin:1"), InvalidDimension);
  EXPECT_EQ(parse_suites("all").size(), 6u);
  EXPECT_EQ(parse_suites("lie,chart"), (std::set<std::string>{"lie", "chart"}));
  EXPECT_THROW(parse_suites("lie,bogus"), ParseError);
}

TEST(Io, ZeroMuIsConfigError) {
  RunConfig c;
  c.algebra = "sym:2";
  c.mu = Rational(0);
  EXPECT_THROW(run(c), InvalidDimension);
}

TEST(Io, ReportRoundTrip) {
  RunConfig c;
  c.algebra = "rank1";
  c.suites = parse_suites("jordan,lie,chart");
  const VerificationReport r = run(c);
  EXPECT_TRUE(r.passed());
  ASSERT_EQ(r.suites.size(), 3u);
  EXPECT_EQ(r.constants.at("dim_g"), "3");
  EXPECT_EQ(r.constants.at("beta_oo"), "2");
  const json j = to_json(r);
  EXPECT_EQ(to_json(report_from_json(j)), j);
  EXPECT_EQ(to_text(report_from_json(j)), to_text(r));
}

TEST(Io, FailingSuiteMarksReport) {
  RunConfig c;
  c.algebra = "sym:2";
  c.suites = parse_suites("lie");
  const VerificationReport r = run(c);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.constants.at("kappa_g"), "undefined");
  EXPECT_EQ(r.constants.at("kappa_g0_variant"), "1");
}

TEST(Io, BracketTable) {
  const auto g = build_kkt(make_rank_one(), Rational(1));
  const json t = bracket_table_json(g);
  EXPECT_EQ(t.at("basis"), json({"u1", "h1", "v1"}));
  EXPECT_EQ(t.at("killing")[1][1], "2");
}
