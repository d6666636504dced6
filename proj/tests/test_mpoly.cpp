#include <random>

#include <gtest/gtest.h>

#include "jstar/mpoly.hpp"

using namespace jstar;

namespace {

VarSetPtr lvars() { return make_varset({"l1", "lp1"}); }

Poly random_poly(const VarSetPtr& vs, std::mt19937& rng) {
  std::uniform_int_distribution<int> e(0, 2);
  std::uniform_int_distribution<long> c(-4, 4);
  Poly p(vs);
  for (int t = 0; t < 4; ++t) {
    Exponents ex(vs->size());
    for (auto& x : ex) x = static_cast<std::uint8_t>(e(rng));
    p.add_term(ex, Scalar(c(rng)) * Scalar::nu(e(rng) - 1));
  }
  return p;
}

}  // namespace

TEST(Poly, Products) {
  const auto vs = lvars();
  const Poly l = Poly::variable(vs, "l1"), lp = Poly::variable(vs, "lp1");
  EXPECT_EQ((l * lp).coefficient({1, 1}), Scalar(1));

  const auto zs = make_varset({"z1"});
  const Poly z = Poly::variable(zs, 0);
  const Poly sq = (z + Poly(1L)) * (z + Poly(1L));
  EXPECT_EQ(sq, z * z + z * Rational(2) + Poly::constant(zs, Scalar(1)));

  EXPECT_EQ(l * Scalar::nu(1) + l * Scalar::nu(1), l * (Scalar(2) * Scalar::nu(1)));
}

TEST(Poly, Derivatives) {
  const auto vs = lvars();
  const Poly l = Poly::variable(vs, "l1"), lp = Poly::variable(vs, "lp1");
  EXPECT_EQ(poly_diff(l * l * lp, "l1"), l * lp * Rational(2));
  EXPECT_TRUE(poly_diff(l, "lp1").is_zero());
  const auto zs = make_varset({"z1"});
  const Poly z = Poly::variable(zs, 0);
  EXPECT_EQ(poly_diff(z * z * z * Scalar::nu(1), "z1"), z * z * (Scalar(3) * Scalar::nu(1)));
  EXPECT_THROW(l.diff("q"), UnknownVariable);
}

TEST(Poly, MixedPartialsCommute) {
  std::mt19937 rng(3);
  const auto vs = make_varset({"a", "b", "c"});
  for (int t = 0; t < 20; ++t) {
    const Poly p = random_poly(vs, rng);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(p.diff(i).diff(j), p.diff(j).diff(i));
  }
}

TEST(Poly, SubstitutionToHolomorphicFrame) {
  const auto src = make_varset({"l1", "eta1"});
  const auto dst = make_varset({"z1", "zb1"});
  const Poly z = Poly::variable(dst, 0), zb = Poly::variable(dst, 1);
  const Poly l_img = (z + zb) * Rational(1, 2);
  const Scalar inv_2inu = Scalar::monomial(GaussianRational(Rational(0), Rational(-1, 2)), -1);
  const Poly eta_img = (z - zb) * inv_2inu;
  std::map<std::string, Poly> m{{"l1", l_img}, {"eta1", eta_img}};
  EXPECT_EQ(poly_substitute(Poly::variable(src, 0), m, dst), l_img);
  EXPECT_EQ(poly_substitute(Poly::variable(src, 1), m, dst), eta_img);
  // z = l + i nu eta recovers z
  const Poly back = l_img + eta_img * (Scalar::i() * Scalar::nu(1));
  EXPECT_EQ(back, z);
}

TEST(Poly, SubstitutionIsHomomorphism) {
  std::mt19937 rng(11);
  const auto vs = make_varset({"a", "b"});
  const auto ws = make_varset({"x", "y"});
  const Poly x = Poly::variable(ws, 0), y = Poly::variable(ws, 1);
  std::map<std::string, Poly> m{{"a", x + y * Rational(2)}, {"b", x * y - Poly::constant(ws, Scalar::nu(1))}};
  for (int t = 0; t < 15; ++t) {
    const Poly p = random_poly(vs, rng), q = random_poly(vs, rng);
    EXPECT_EQ((p * q).substitute(m, ws), p.substitute(m, ws) * q.substitute(m, ws));
    EXPECT_EQ((p + q).substitute(m, ws), p.substitute(m, ws) + q.substitute(m, ws));
  }
  std::map<std::string, Poly> id{{"a", Poly::variable(vs, 0)}, {"b", Poly::variable(vs, 1)}};
  const Poly p = random_poly(vs, rng);
  EXPECT_EQ(p.substitute(id, vs), p);
}

TEST(Poly, VarSetDiscipline) {
  const Poly a = Poly::variable(make_varset({"x"}), 0);
  const Poly b = Poly::variable(make_varset({"y"}), 0);
  EXPECT_THROW(a + b, VarSetMismatch);
  EXPECT_THROW(make_varset({"x", "x"}), InvalidDimension);
  EXPECT_EQ((a + Poly(2L)).constant_term(), Scalar(2));
  EXPECT_EQ(a.degree(), 1);
  EXPECT_EQ(Poly().degree(), -1);
}
