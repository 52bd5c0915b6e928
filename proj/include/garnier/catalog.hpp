#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "garnier/rational.hpp"

namespace garnier {

using Pair = std::pair<Var, Var>;  // (coordinate, momentum)
using VectorField = std::vector<RationalFunction>;

/// Affine relation `relation == 0` over the parameters. `solved_for` is the
/// last listed parameter, eliminated when a check opts in.
struct Constraint {
  Polynomial relation;
  Var solved_for;
  std::string text;

  /// Binding of `solved_for` to the solution of the relation.
  Bindings elimination() const;
};

struct HamiltonianSystem {
  std::string name;
  std::vector<Pair> pairs;
  std::vector<Var> times;
  std::vector<RationalFunction> hamiltonians;  // one per time
  std::vector<Var> params;
  std::optional<Constraint> constraint;
  unsigned degree_record = 0;
  /// The involution or 3-cycle pi generating H2 (and H3) from H1, as a
  /// substitution on phase variables, times and parameters; empty if the
  /// system is not built that way.
  Bindings pi;

  /// Coordinates and momenta flattened as q1, p1, q2, p2, ...
  std::vector<Var> phase_vars() const;
  VarSet phase_set() const;
  std::size_t time_index(Var t) const;
};

enum class PainleveKind { VI, V, IV, III, II };

/// Throws std::invalid_argument when the parameter count does not match
/// (VI: 5, V: 3, IV: 2, III: 2, II: 1).
RationalFunction painleve_hamiltonian(PainleveKind kind, Var x, Var y, Var t,
                                      const std::vector<RationalFunction>& params);

/// Coupling families R(ql, pl, qm, pm, tl, tm; alpha, beta), keyed by the
/// system they first appear in: "SdeGH-3v", "deGHS", "SdeGH3", "SdeGaH-3v",
/// "SdeGaK".
struct CouplingArgs {
  Var ql, pl, qm, pm, tl, tm;
  RationalFunction alpha, beta;
};
/// Throws std::invalid_argument for an unknown family.
RationalFunction coupling_R(std::string_view family, const CouplingArgs& args);
const std::vector<std::string>& coupling_families();

/// Components (dH/dp_i, -dH/dq_i) per pair for the Hamiltonian of one time.
VectorField vector_field(const HamiltonianSystem& sys, std::size_t time_index);

/// Throws std::out_of_range for an unknown key.
const HamiltonianSystem& registry_get(std::string_view name);
const std::vector<std::string>& registry_keys();

/// Canonical text dump: one "key: value" line per field and Hamiltonian.
std::string dump(const HamiltonianSystem& sys);

}  // namespace garnier
