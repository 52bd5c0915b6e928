#include <gtest/gtest.h>

#include "garnier/transforms.hpp"
#include "garnier/verify.hpp"
#include "support.hpp"

namespace garnier {
namespace {

using testing::rf;
using testing::v;

BirationalMap plane_map(std::vector<const char*> forward, std::vector<const char*> inverse = {}) {
  BirationalMap m;
  m.id = "test";
  m.source = {v("x"), v("y")};
  m.target = {v("X"), v("Y")};
  for (const char* f : forward) m.forward.push_back(rf(f));
  for (const char* f : inverse) m.inverse.push_back(rf(f));
  return m;
}

const std::vector<Pair> kPlane{{Var::named("x"), Var::named("y")}};

TEST(Symplectic, ScalingFailsWithWitness) {
  const auto r = check_symplectic(plane_map({"2*x", "y"}), kPlane);
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.witness.find("(1,2)"), std::string::npos) << r.witness;
}

TEST(Symplectic, ShearAndInversionChartPass) {
  EXPECT_TRUE(check_symplectic(plane_map({"x", "y + x^2"}), kPlane).ok);
  // The usual chart X = 1/x, Y = -x(xy + a).
  EXPECT_TRUE(check_symplectic(plane_map({"1/x", "-x*(x*y + a1)"}), kPlane).ok);
}

TEST(Symplectic, DegenerateJacobianThrows) {
  EXPECT_THROW(check_symplectic(plane_map({"x", "x^2"}), kPlane), std::domain_error);
}

TEST(Symplectic, EveryRegisteredChartIsSymplectic) {
  for (const auto& key : registry_keys()) {
    const auto& sys = registry_get(key);
    for (const auto& c : charts(key)) EXPECT_TRUE(check_symplectic(c, sys.pairs).ok) << c.id;
  }
}

TEST(Reconstruct, RecoversHamiltonianWithZeroConstant) {
  const std::vector<Pair> pairs{{v("x"), v("y")}, {v("z"), v("w")}};
  const RationalFunction h = rf("x^2*y + y^2*z*w - 3*x*w + 2*z");
  const VectorField field{h.derivative(v("y")), -h.derivative(v("x")), h.derivative(v("w")), -h.derivative(v("z"))};
  EXPECT_EQ(reconstruct_hamiltonian(field, pairs), h);
}

TEST(Reconstruct, RejectsNonClosedAndNonPolynomialFields) {
  const std::vector<Pair> pairs{{v("x"), v("y")}};
  // x' = x, y' = 0: d/dy(x) = 1 but -d/dx(0) = 0 needs H_yx = H_xy.
  EXPECT_THROW(reconstruct_hamiltonian({rf("x"), rf("0")}, pairs), NotHamiltonian);
  EXPECT_THROW(reconstruct_hamiltonian({rf("1/x"), rf("0")}, pairs), std::invalid_argument);
}

TEST(Maps, RegisteredInversesRoundTrip) {
  for (const auto& key : registry_keys())
    for (const auto& c : charts(key))
      if (c.has_inverse()) EXPECT_TRUE(check_round_trip(c).passed()) << c.id;
}

TEST(Maps, ComposeWithIdentity) {
  const auto& sys = registry_get("uraS");
  const BirationalMap id = identity_map(sys);
  for (const auto& g : symmetries("uraS")) {
    EXPECT_TRUE(same_action(compose(g, id), g)) << g.id;
    EXPECT_TRUE(same_action(compose(id, g), g)) << g.id;
  }
}

TEST(Maps, ComposeIsAssociative) {
  const auto& s = symmetries("autoG14");
  ASSERT_GE(s.size(), 3U);
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b) {
      const auto& c = s[(a + b) % s.size()];
      EXPECT_TRUE(same_action(compose(s[a], compose(s[b], c)), compose(compose(s[a], s[b]), c)))
          << s[a].id << " " << s[b].id << " " << c.id;
    }
}

TEST(Maps, ComposeRejectsMismatchedVariables) {
  EXPECT_THROW(compose(transform("autoG14:s0"), transform("dVV:s1")), std::invalid_argument);
}

TEST(Maps, LookupAndManifest) {
  EXPECT_EQ(transform("dVV:g1").id, "dVV:g1");
  EXPECT_THROW(transform("nope:x"), std::out_of_range);
  const auto m = manifest();
  std::size_t alternatives = 0;
  for (const auto& e : m) alternatives += e.alternative ? 1 : 0;
  EXPECT_EQ(alternatives, 9U);
  EXPECT_EQ(degeneration_schemes().size(), 4U);
  EXPECT_EQ(conjugacies().size(), 3U);
}

TEST(Pushforward, PrintedChartFieldIsPolynomial) {
  const auto& sys = registry_get("autoG14");
  const auto& chart = charts("autoG14").front();
  for (std::size_t b = 0; b < sys.times.size(); ++b) {
    const VectorField f = pushforward_vector_field(chart, sys, b);
    for (const auto& c : f) EXPECT_TRUE(c.is_polynomial()) << chart.id << " " << c.to_string();
    EXPECT_NO_THROW(reconstruct_hamiltonian(f, {{chart.target[0], chart.target[1]}, {chart.target[2], chart.target[3]}}));
  }
}

TEST(Pushforward, NeedsInverse) {
  BirationalMap m = plane_map({"x", "y"});
  HamiltonianSystem sys;
  sys.name = "plane";
  sys.pairs = {{v("x"), v("y")}};
  sys.times = {v("t")};
  sys.hamiltonians = {rf("y^2/2")};
  EXPECT_THROW(pushforward_vector_field(m, sys, 0), std::invalid_argument);
}

TEST(Degeneration, LimitIsFreeOfEpsilon) {
  for (const auto& d : degeneration_schemes()) {
    const FlowSystem lim = degeneration_limit(d);
    for (const auto& field : lim.fields)
      for (const auto& c : field) EXPECT_FALSE(c.depends_on(d.eps)) << d.id;
  }
}

TEST(Degeneration, RewrittenSourceStillHasEpsilon) {
  const FlowSystem before = apply_degeneration(degeneration("uraS->dVV"));
  bool any = false;
  for (const auto& field : before.fields)
    for (const auto& c : field) any = any || c.depends_on(Var::named("eps"));
  EXPECT_TRUE(any);
}

}  // namespace
}  // namespace garnier
