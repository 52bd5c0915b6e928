#include <gtest/gtest.h>

#include "garnier/catalog.hpp"
#include "support.hpp"

namespace garnier {
namespace {

using testing::rf;
using testing::v;

TEST(Painleve, SecondAndFourth) {
  EXPECT_EQ(painleve_hamiltonian(PainleveKind::II, v("x"), v("y"), v("t"), {rf("a1")}),
            rf("y^2/2 - (x^2 + t/2)*y - a1*x"));
  EXPECT_EQ(painleve_hamiltonian(PainleveKind::IV, v("x"), v("y"), v("t"), {rf("a1"), rf("a2")}),
            rf("-x^2*y + 2*x*y^2 - 2*t*x*y - 2*a1*y - a2*x"));
  // Expanded by hand: -1 + 2 - 2 = -1 at x = y = t = 1 with zero parameters.
  const RationalFunction h4 = painleve_hamiltonian(PainleveKind::IV, v("x"), v("y"), v("t"), {0, 0});
  EXPECT_EQ(substitute(h4, {{v("x"), 1}, {v("y"), 1}, {v("t"), 1}}), RationalFunction(-1));
}

TEST(Painleve, Arity) {
  EXPECT_THROW(painleve_hamiltonian(PainleveKind::VI, v("x"), v("y"), v("t"), {1, 2}), std::invalid_argument);
  EXPECT_THROW(painleve_hamiltonian(PainleveKind::II, v("x"), v("y"), v("t"), {}), std::invalid_argument);
}

TEST(Painleve, VariablesAreRenamed) {
  // Placeholders are substituted simultaneously, so swapping roles is safe.
  const RationalFunction h = painleve_hamiltonian(PainleveKind::II, v("y"), v("x"), v("s"), {rf("x")});
  EXPECT_EQ(h, rf("x^2/2 - (y^2 + s/2)*x - x*y"));
}

TEST(Coupling, ThirteenthFamily) {
  const RationalFunction r = coupling_R("SdeGaK", {v("x"), v("y"), v("z"), v("w"), v("t"), v("s"), rf("a3"), rf("a1")});
  EXPECT_EQ(r, rf("a1*x*y/(t-s) - a1*y*z/(t-s) - a3*x*w/(t-s) + a3*z*w/(t-s)"
                  " - (2*(x-z)^2 - t + s)*y*w/(2*(t-s))"));
}

TEST(Coupling, VanishesWithoutMomentaAndParameters) {
  for (const auto& fam : coupling_families()) {
    const RationalFunction r = coupling_R(fam, {v("x"), v("y"), v("z"), v("w"), v("t"), v("s"), 0, 0});
    EXPECT_TRUE(substitute(r, {{v("y"), 0}, {v("w"), 0}}).is_zero()) << fam;
  }
  EXPECT_THROW(coupling_R("nope", {v("x"), v("y"), v("z"), v("w"), v("t"), v("s"), 0, 0}), std::invalid_argument);
}

TEST(Coupling, SwappedFamilyMatchesPiImage) {
  // deGHS: H2 = pi(H1) contains R(z,w,x,y,s,t;a2,a1) from the first coupling.
  const auto& sys = registry_get("deGHS");
  const RationalFunction h2 =
      painleve_hamiltonian(PainleveKind::V, v("z"), v("w"), v("s"), {rf("a4"), rf("a2"), rf("a5")}) +
      coupling_R("deGHS", {v("z"), v("w"), v("q"), v("p"), v("s"), v("u"), rf("a2"), rf("a3")}) +
      coupling_R("deGHS", {v("z"), v("w"), v("x"), v("y"), v("s"), v("t"), rf("a2"), rf("a1")});
  EXPECT_EQ(sys.hamiltonians[1], h2);
}

TEST(Registry, Keys) {
  EXPECT_EQ(registry_keys().size(), 15U);
  EXPECT_THROW(registry_get("G99"), std::out_of_range);
}

TEST(Registry, AutoG14) {
  const auto& sys = registry_get("autoG14");
  EXPECT_EQ(sys.hamiltonians[0], rf("-q1^2*p1 + p1^2/2 - a2*q1 - q2^2*p2 + p2^2/2 - a0*q2 + p1*p2"));
  const VectorField vf = vector_field(sys, 0);
  EXPECT_EQ(vf[0], rf("-q1^2 + p1 + p2"));
  EXPECT_EQ(vf[1], rf("2*q1*p1 + a2"));
}

TEST(Registry, DVVSecondHamiltonianIsPiImage) {
  const auto& sys = registry_get("dVV");
  const Bindings pi{{v("x"), rf("z")}, {v("y"), rf("w")}, {v("z"), rf("x")}, {v("w"), rf("y")},
                    {v("t"), rf("s")}, {v("s"), rf("t")}, {v("a1"), rf("a2")}, {v("a2"), rf("a1")}};
  EXPECT_EQ(sys.hamiltonians[1], substitute(sys.hamiltonians[0], pi));
}

TEST(Registry, SdeG4ReducesOnDiagonal) {
  const auto& sys = registry_get("SdeG4");
  const RationalFunction h = substitute(sys.hamiltonians[0], {{v("a1"), 0}, {v("a3"), 0}, {v("z"), rf("x")}});
  EXPECT_EQ(h, painleve_hamiltonian(PainleveKind::II, v("x"), v("y"), v("t"), {0}) + rf("y*w/2"));
}

TEST(Registry, KimuraField) {
  const VectorField vf = vector_field(registry_get("Kimura-times"), 0);
  EXPECT_EQ(vf[0], rf("-x^2 + y + w - T/2"));
}

TEST(Registry, Invariants) {
  for (const auto& key : registry_keys()) {
    const auto& sys = registry_get(key);
    SCOPED_TRACE(key);
    ASSERT_EQ(sys.hamiltonians.size(), sys.times.size());
    const VarSet phase = sys.phase_set();
    unsigned deg = 0;
    for (const auto& h : sys.hamiltonians) {
      EXPECT_FALSE((h.den().support() & phase).any());
      deg = std::max(deg, h.num().degree_in(phase));
    }
    EXPECT_EQ(deg, sys.degree_record);
    ASSERT_TRUE(sys.constraint.has_value());
    EXPECT_NO_THROW(sys.constraint->elimination());
  }
}

TEST(Registry, PiOrderAndStructure) {
  for (const auto& key : registry_keys()) {
    const auto& sys = registry_get(key);
    if (sys.pi.empty()) continue;
    SCOPED_TRACE(key);
    const std::size_t order = sys.times.size();
    // pi^order fixes every variable it moves.
    for (const auto& [var, img] : sys.pi) {
      RationalFunction e = RationalFunction::variable(var);
      for (std::size_t k = 0; k < order; ++k) e = substitute(e, sys.pi);
      EXPECT_EQ(e, RationalFunction::variable(var)) << var.name();
    }
    for (std::size_t k = 1; k < order; ++k)
      EXPECT_EQ(sys.hamiltonians[k], substitute(sys.hamiltonians[k - 1], sys.pi));
  }
}

TEST(Registry, DumpMentionsEverything) {
  const std::string d = dump(registry_get("autoG14"));
  EXPECT_NE(d.find("system: autoG14"), std::string::npos);
  EXPECT_NE(d.find("pairs: (q1,p1) (q2,p2)"), std::string::npos);
  EXPECT_NE(d.find("constraint: a0+a1+a2 = 0"), std::string::npos);
}

}  // namespace
}  // namespace garnier
