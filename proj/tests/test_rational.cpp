#include <gtest/gtest.h>

#include "support.hpp"

using namespace garnier;
using garnier::testing::poly;
using garnier::testing::random_poly;
using garnier::testing::rf;
using garnier::testing::v;

TEST(Rational, Examples) {
  EXPECT_TRUE((rf("x/t") + rf("-x/t")).is_zero());
  EXPECT_EQ(rf("(1+i)*(1-i)"), RationalFunction(2));
  const RationalFunction q = rf("(x^2-y^2)/(x-y)");
  EXPECT_TRUE(q.is_polynomial());
  EXPECT_EQ(q, rf("x+y"));
  EXPECT_EQ(rf("x/t").derivative(v("t")), rf("-x/t^2"));
  EXPECT_THROW((void)(rf("x") / rf("0")), ZeroDivision);
}

TEST(Rational, DenominatorIsMonicAndReduced) {
  const RationalFunction q = RationalFunction::fraction(poly("2*x*y + 2*y"), poly("-4*x^2 + 4"));
  EXPECT_TRUE(q.den().leading_term().coef.is_one());
  EXPECT_EQ(q, rf("-y/(2*x - 2)"));
}

TEST(Rational, TwoConstructionsCompareEqual) {
  std::mt19937 rng(12);
  const std::vector<Var> vars = {v("x"), v("y"), v("t")};
  for (int k = 0; k < 20; ++k) {
    const Polynomial a = random_poly(rng, vars, 3, 4) + Polynomial(1);
    const Polynomial b = random_poly(rng, vars, 3, 4) + Polynomial::variable(v("t"));
    const Polynomial c = random_poly(rng, vars, 2, 3) + Polynomial(2);
    const RationalFunction direct = RationalFunction::fraction(a, b);
    const RationalFunction via = RationalFunction::fraction(a * c, b * c);
    EXPECT_EQ(direct, via);
    EXPECT_EQ(RationalFunction::fraction(direct.num(), direct.den()), direct);
    EXPECT_EQ(direct / direct, RationalFunction(1));
    EXPECT_EQ(direct * direct.inverse(), RationalFunction(1));
  }
}

TEST(Rational, FieldAxiomsOnRandomFractions) {
  std::mt19937 rng(13);
  const std::vector<Var> vars = {v("x"), v("t")};
  const auto random_rf = [&] {
    return RationalFunction::fraction(random_poly(rng, vars, 2, 3) + Polynomial(1),
                                      random_poly(rng, vars, 2, 3) + Polynomial::variable(v("x")));
  };
  for (int k = 0; k < 20; ++k) {
    const RationalFunction f = random_rf(), g = random_rf(), h = random_rf();
    EXPECT_EQ((f + g) + h, f + (g + h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ((f * g).derivative(v("x")), f.derivative(v("x")) * g + f * g.derivative(v("x")));
    EXPECT_EQ(f.derivative(v("x")).derivative(v("t")), f.derivative(v("t")).derivative(v("x")));
  }
}

TEST(Rational, SubstitutionTelescopes) {
  const Bindings chart = {{v("x"), rf("1/x")}, {v("y"), rf("-x*(x*y + a2)")}};
  EXPECT_EQ(substitute(rf("x*y"), chart), rf("-(x*y + a2)"));
}

TEST(Rational, SubstitutionIsSimultaneous) {
  const Bindings swap = {{v("x"), rf("y")}, {v("y"), rf("x")}};
  EXPECT_EQ(substitute(rf("x^2 + 2*y"), swap), rf("y^2 + 2*x"));
}

TEST(Rational, ZeroDenominatorAfterSubstitution) {
  EXPECT_THROW((void)substitute(rf("1/(x - y)"), {{v("x"), rf("y")}}), ZeroDivision);
}

// substitute(substitute(f, g), h) = substitute(f, g o h) where (g o h)(v) =
// substitute(g(v), h).
TEST(Rational, SubstitutionComposition) {
  std::mt19937 rng(14);
  const std::vector<Var> vars = {v("x"), v("y"), v("t")};
  for (int k = 0; k < 15; ++k) {
    const Polynomial den = random_poly(rng, vars, 1, 2) + Polynomial(3);
    if (den.is_zero()) continue;
    const RationalFunction f = RationalFunction::fraction(random_poly(rng, vars, 3, 5), den);
    Bindings g, h;
    for (Var x : vars) {
      g.emplace_back(x, RationalFunction::fraction(random_poly(rng, vars, 2, 3),
                                                   Polynomial::variable(vars[k % 3]) + Polynomial(k + 1)));
      h.emplace_back(x, RationalFunction(random_poly(rng, vars, 1, 3)));
    }
    Bindings gh;
    for (const auto& [x, val] : g) gh.emplace_back(x, substitute(val, h));
    try {
      EXPECT_EQ(substitute(substitute(f, g), h), substitute(f, gh));
    } catch (const ZeroDivision&) {
      // a random instance that hits a pole on both routes
    }
  }
}

TEST(Rational, EpsilonLimits) {
  const Var eps = v("eps");
  EXPECT_EQ(limit_epsilon_zero(rf("(eps^2 + eps)/eps"), eps), RationalFunction(1));
  EXPECT_THROW((void)limit_epsilon_zero(rf("1/eps"), eps), PoleAtZero);
  EXPECT_THROW((void)limit_epsilon_zero(rf("a1"), v("a1")), std::invalid_argument);
  EXPECT_EQ(limit_epsilon_zero(rf("(x + eps*y)/(1 + eps^2*t)"), eps), rf("x"));
}

// Oracle: the limit agrees with evaluation at small eps on pole-free
// instances (numerators are affine in the tested eps values).
TEST(Rational, EpsilonLimitMatchesSmallValues) {
  std::mt19937 rng(15);
  const Var eps = v("eps");
  const std::vector<Var> vars = {v("x"), v("eps")};
  for (int k = 0; k < 20; ++k) {
    const Polynomial n = random_poly(rng, vars, 3, 4);
    const Polynomial d = random_poly(rng, vars, 2, 3) + Polynomial(1 + k);
    RationalFunction f;
    try {
      f = RationalFunction::fraction(n, d);
    } catch (const ZeroDivision&) {
      continue;
    }
    RationalFunction lim;
    try {
      lim = limit_epsilon_zero(f, eps);
    } catch (const PoleAtZero&) {
      continue;
    }
    const RationalFunction at_x = substitute(lim, {{v("x"), RationalFunction(mpq_class(1, 3))}});
    for (int j = 1; j <= 100; ++j) {
      const mpq_class e(1, 1000 * j);
      const RationalFunction val =
          substitute(f, {{v("x"), RationalFunction(mpq_class(1, 3))}, {eps, RationalFunction(e)}});
      ASSERT_TRUE(val.is_constant());
      EXPECT_NEAR(val.num().constant_term().a().get_d(), at_x.num().constant_term().a().get_d(),
                  std::abs(e.get_d()) * 1e4 + 1e-12);
    }
  }
}

TEST(Rational, CanonicalRoundTrip) {
  for (const char* text : {"0", "x", "(x^2 + i*r2*y)/(t - 1/2)", "-1/(3*s*t)", "x^-2*y", "(1+i)^3*a1"}) {
    const RationalFunction f = rf(text);
    EXPECT_EQ(rf(f.to_canonical().c_str()), f) << text;
    EXPECT_EQ(rf(f.to_canonical().c_str()).to_canonical(), f.to_canonical());
    EXPECT_EQ(rf(f.to_string().c_str()), f) << text;
  }
}

TEST(Rational, ParseErrors) {
  EXPECT_THROW((void)rf("x +"), ParseError);
  EXPECT_THROW((void)rf("foo"), ParseError);
  EXPECT_THROW((void)rf("(x"), ParseError);
  EXPECT_EQ(rf("-x^2"), RationalFunction(-poly("x^2")));
}

namespace garnier {
namespace {

// Images whose denominators share factors (eps in both) once over-cancelled.
TEST(Rational, SubstitutionWithSharedDenominatorFactors) {
  const Bindings b{{testing::v("x"), testing::rf("1/eps")},
                   {testing::v("y"), testing::rf("(1 + eps*T)/(eps^2*T)")},
                   {testing::v("z"), testing::rf("eps/(T - 1)")}};
  for (const char* text : {"x*y", "x^2*y*z + y - x", "x^3*z^2 - y^2*z + 7", "(x*y + z)/(x - y)"}) {
    const RationalFunction f = testing::rf(text);
    // Oracle: term-by-term field arithmetic, no substitution engine.
    auto eval_poly = [&](const Polynomial& p) {
      RationalFunction acc;
      for (const Term& t : p.terms()) {
        RationalFunction m(t.coef);
        for (const auto& [var, img] : b) m *= img.pow(static_cast<int>(t.mono[var]));
        acc += m;
      }
      return acc;
    };
    EXPECT_EQ(substitute(f, b), eval_poly(f.num()) / eval_poly(f.den())) << text;
  }
}

}  // namespace
}  // namespace garnier
