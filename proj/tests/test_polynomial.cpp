#include <gtest/gtest.h>

#include "garnier/gcd.hpp"
#include "support.hpp"

using namespace garnier;
using garnier::testing::poly;
using garnier::testing::random_poly;
using garnier::testing::v;

namespace {

const std::vector<Var> kSmall = {v("x"), v("y"), v("t"), v("a1")};

}  // namespace

TEST(Polynomial, RingAxiomsOnRandomInstances) {
  std::mt19937 rng(1);
  for (int k = 0; k < 60; ++k) {
    const bool ext = k % 3 == 0;
    const Polynomial f = random_poly(rng, kSmall, 4, 6, ext);
    const Polynomial g = random_poly(rng, kSmall, 4, 6, ext);
    const Polynomial h = random_poly(rng, kSmall, 4, 6, ext);
    EXPECT_EQ(f + g, g + f);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f + g) + h, f + (g + h));
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_TRUE((f - f).is_zero());
    if (!g.is_zero()) {
      const auto q = (f * g).exact_div(g);
      ASSERT_TRUE(q.has_value());
      EXPECT_EQ(*q, f);
    }
  }
}

TEST(Polynomial, NonDivisibleQuotientIsEmpty) {
  EXPECT_FALSE(poly("x^2+y").exact_div(poly("x+1")).has_value());
  EXPECT_FALSE(poly("x*y+1").exact_div(poly("x")).has_value());
}

TEST(Polynomial, TermsAreStrictlyDecreasing) {
  std::mt19937 rng(2);
  const Polynomial f = random_poly(rng, kSmall, 5, 30) * random_poly(rng, kSmall, 3, 10);
  const auto terms = f.terms();
  for (std::size_t k = 1; k < terms.size(); ++k) {
    EXPECT_GT(terms[k - 1].mono, terms[k].mono);
    EXPECT_FALSE(terms[k].coef.is_zero());
  }
}

TEST(Polynomial, Derivatives) {
  EXPECT_EQ(poly("x^3*y^2").derivative(v("x")), poly("3*x^2*y^2"));
  const Polynomial h2 = poly("y^2/2 - (x^2 + t/2)*y - a1*x");
  EXPECT_EQ(h2.derivative(v("y")), poly("y - x^2 - t/2"));
}

TEST(Polynomial, LeibnizAndMixedPartials) {
  std::mt19937 rng(4);
  for (int k = 0; k < 40; ++k) {
    const Polynomial f = random_poly(rng, kSmall, 4, 8, k % 2 == 0);
    const Polynomial g = random_poly(rng, kSmall, 4, 8);
    for (Var x : kSmall) EXPECT_EQ((f * g).derivative(x), f.derivative(x) * g + f * g.derivative(x));
    EXPECT_EQ(f.derivative(v("x")).derivative(v("y")), f.derivative(v("y")).derivative(v("x")));
  }
}

TEST(Polynomial, DegreeIn) {
  VarSet xy;
  xy.set(v("x").id());
  xy.set(v("y").id());
  EXPECT_EQ(poly("y^2/2 - (x^2 + t/2)*y - a1*x").degree_in(xy), 3U);
  EXPECT_EQ(poly("7").degree_in(xy), 0U);
  EXPECT_THROW((void)Polynomial().degree_in(xy), std::domain_error);
}

TEST(Polynomial, CanonicalTextRoundTrip) {
  std::mt19937 rng(6);
  for (int k = 0; k < 30; ++k) {
    const Polynomial f = random_poly(rng, kSmall, 4, 8, true).scaled(FieldElement(mpq_class(3, 7)));
    EXPECT_EQ(poly(f.to_canonical().c_str()), f);
    EXPECT_EQ(poly(f.to_string().c_str()), f);
  }
  EXPECT_EQ(Polynomial().to_canonical(), "0");
  EXPECT_EQ(poly("-2*x^2*y + 1/3").to_canonical(),
            "(-2+0*i+0*r2+0*i*r2)*x^2*y^1 + (1/3+0*i+0*r2+0*i*r2)");
}

TEST(Polynomial, CoefficientViews) {
  const Polynomial f = poly("x^2*y + 3*x*t - y + 1");
  const auto c = f.coefficients_in(v("x"));
  ASSERT_EQ(c.size(), 3U);
  EXPECT_EQ(c[0], poly("1 - y"));
  EXPECT_EQ(c[1], poly("3*t"));
  EXPECT_EQ(c[2], poly("y"));
  EXPECT_EQ(Polynomial::from_coefficients(c, v("x")), f);
  EXPECT_EQ(f.evaluate(v("x"), 2), poly("4*y + 6*t - y + 1"));
}

TEST(Gcd, SmallExamples) {
  EXPECT_EQ(gcd(poly("x^2 - y^2"), poly("x - y")), poly("x - y"));
  EXPECT_EQ(gcd(poly("3*x + 6"), Polynomial()), poly("x + 2"));
  EXPECT_TRUE(gcd(Polynomial(), Polynomial()).is_zero());
  const Polynomial a = poly("(x + t)^2 * (y - 1)");
  const Polynomial b = poly("(x + t) * (y - 1)^2");
  const Polynomial g = gcd(a, b);
  EXPECT_TRUE(a.exact_div(g).has_value());
  EXPECT_TRUE(b.exact_div(g).has_value());
  EXPECT_EQ(g, poly("(x + t)*(y - 1)"));
  EXPECT_EQ(gcd(poly("x*y"), poly("x^2")), poly("x"));
  EXPECT_EQ(gcd(poly("2*i*x + 2"), poly("x^2 + 1")), poly("x - i"));
}

// Oracle: gcd of g*f1 and g*f2 with random cofactors is g up to a unit.
TEST(Gcd, RecoversPlantedFactor) {
  std::mt19937 rng(9);
  const std::vector<Var> vars = {v("x"), v("y"), v("z"), v("t"), v("a1"), v("a2")};
  for (int k = 0; k < 25; ++k) {
    const Polynomial g = random_poly(rng, vars, 3, 4, k % 4 == 0) + Polynomial::variable(vars[k % 6]);
    const Polynomial f1 = random_poly(rng, vars, 3, 5) + Polynomial(1);
    const Polynomial f2 = random_poly(rng, vars, 3, 5) + Polynomial::variable(v("s"));
    if (g.is_zero() || g.is_constant()) continue;
    const Polynomial a = g * f1, b = g * f2 * g;
    const Polynomial d = gcd(a, b);
    ASSERT_TRUE(a.exact_div(d).has_value());
    ASSERT_TRUE(b.exact_div(d).has_value());
    EXPECT_TRUE(d.exact_div(g.monic()).has_value()) << g.to_string();
    EXPECT_TRUE(d.leading_term().coef.is_one());
  }
}

TEST(Gcd, DegreeBoundImage) {
  const Polynomial a = poly("(x + y)*(x - t)");
  const Polynomial b = poly("(x + y)*(x + 1)");
  EXPECT_EQ(gcd_degree_bound(a, b, v("x")), 1);
  EXPECT_EQ(gcd_degree_bound(poly("x - t"), poly("x + 1"), v("x")), 0);
}
