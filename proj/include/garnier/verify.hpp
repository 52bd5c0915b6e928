#pragma once

#include <optional>
#include <string>
#include <vector>

#include "garnier/transforms.hpp"

namespace garnier {

enum class Verdict { pass, fail, error };
const char* to_string(Verdict v);

struct CheckReport {
  std::string id;
  Verdict verdict = Verdict::pass;
  std::string witness;  // empty on pass
  double millis = 0;
  std::string detail;   // e.g. which constraint mode passed

  bool passed() const { return verdict == Verdict::pass; }
};

/// sum_i dF/dp_i dG/dq_i - dF/dq_i dG/dp_i, so that {p_i, q_j} = delta_ij.
RationalFunction poisson_bracket(const RationalFunction& f, const RationalFunction& g, const std::vector<Pair>& pairs);

CheckReport check_commuting_flows(const FlowSystem& sys);
CheckReport check_commuting_flows(const HamiltonianSystem& sys);

/// Residual components of the symmetry identity for every source time.
/// An empty result means the identity holds.
struct Residual {
  std::size_t time_index;
  std::size_t component;
  RationalFunction value;
};
std::vector<Residual> symmetry_residuals(const HamiltonianSystem& sys, const SymmetryTransformation& g,
                                         bool use_constraint);

/// Runs the unconstrained identity and, if that fails, the one with the
/// system's constraint applied. `detail` records which mode passed.
CheckReport check_symmetry(const HamiltonianSystem& sys, const SymmetryTransformation& g);
/// A single mode.
CheckReport check_symmetry(const HamiltonianSystem& sys, const SymmetryTransformation& g, bool use_constraint);

/// The map takes the source flows to the target flows.
CheckReport check_conjugacy(const Conjugacy& c);

/// Forward after inverse and inverse after forward are identities.
CheckReport check_round_trip(const BirationalMap& m);

/// Symplecticity, then per time: polynomial pushforward and successful
/// Hamiltonian reconstruction. Ids "<chart>:symplectic", "<chart>:<time>".
std::vector<CheckReport> check_chart(const HamiltonianSystem& sys, const BirationalMap& chart);
std::vector<CheckReport> check_holomorphy_suite(const HamiltonianSystem& sys);
/// For charts with gauge terms: the static field of H - gauge agrees with the
/// dynamic pushforward ("<chart>:gauge:<time>"), and the static field of H
/// alone is not polynomial ("<chart>:gauge-needed:<time>").
std::vector<CheckReport> check_gauge(const HamiltonianSystem& sys, const BirationalMap& chart);

CheckReport check_degeneration(const DegenerationScheme& d);

/// Throws std::invalid_argument when a Hamiltonian depends on a time.
CheckReport check_first_integrals(const HamiltonianSystem& sys, const RationalFunction& f);

/// The target of the mKdV map: the displayed system in x, y, z, w with times t, S.
FlowSystem mkdv_target_system();
/// Sub-checks (a) map, (b) derivative chain, (c) mKdV and Chazy integral.
std::vector<CheckReport> check_mkdv_reduction();

/// Parameter images that make the variable and time action of `g` a
/// symmetry of `sys`, assuming they are affine in the parameters. Returns
/// nullopt when the linear system is inconsistent or underdetermined, which
/// includes flows that are not linear in the parameters.
std::optional<Bindings> infer_parameter_map(const HamiltonianSystem& sys, const SymmetryTransformation& g);

/// Group words: `word` applied right to left equals the identity on
/// variables, times and parameters.
CheckReport check_relation(const std::string& id, const HamiltonianSystem& sys,
                           const std::vector<const BirationalMap*>& word);

/// The dVV step maps g1..g4 composed, with the parameter map inferred.
BirationalMap composed_pi3();
/// The composite against the registered dVV:pi3: variables and times
/// exactly, parameter images exactly or modulo the constraint.
CheckReport check_pi3_composition();

/// Compares a displayed field with the field of `sys`, time by time, after
/// applying the system's constraint when the plain comparison fails.
CheckReport check_displayed_field(const std::string& id, const HamiltonianSystem& sys, const FlowSystem& shown);

/// The displayed field of the Kimura-time system. With `literal` the capital
/// X, Y, Z in the S-part of dz are kept as independent symbols; otherwise they
/// are read as x, y, z.
FlowSystem kimura_displayed_field(bool literal);

/// Generator relations of the autoG14 symmetry group: s_i^2, pi^2 and
/// pi s0 pi = s2 ("required"), then the braid relations ("braid").
struct RelationReport {
  CheckReport report;
  bool required = true;
};
std::vector<RelationReport> check_autog14_relations();

/// pi applied `order` times is the identity.
CheckReport check_pi_order(const HamiltonianSystem& sys, unsigned order);

/// One coefficient of one Hamiltonian numerator scaled by `factor`.
struct Mutation {
  std::string id;
  std::string system;
  std::size_t hamiltonian = 0;
  std::size_t term = 0;  // index into the numerator's terms
  long factor = 2;
};
const std::vector<Mutation>& mutations();
HamiltonianSystem mutate(const Mutation& m);
/// Pass when some suite (compatibility, holomorphy, symmetry) fails on the
/// mutated system; `detail` names the suite and check that caught it.
CheckReport check_mutation(const Mutation& m);

}  // namespace garnier
