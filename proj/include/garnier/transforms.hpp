#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "garnier/catalog.hpp"

namespace garnier {

/// A change of phase variables, optionally with times and parameters.
///
/// `forward[i]` gives target[i] in the source variables, source times and
/// parameters. When `inverse` is present, `inverse[j]` gives source[j] in the
/// target variables (it may still mention source times and parameters).
/// `time_forward[k]` gives target_times[k] in the source times; an empty time
/// list means the times are untouched. `params` lists parameter images
/// (identity for unlisted parameters). `gauge[b]` is subtracted from the
/// Hamiltonian of source time b in the static two-form identity.
struct BirationalMap {
  std::string id;
  std::vector<Var> source, target;
  std::vector<RationalFunction> forward;
  std::vector<RationalFunction> inverse;
  std::vector<Var> source_times, target_times;
  std::vector<RationalFunction> time_forward;
  std::vector<RationalFunction> time_inverse;
  Bindings params;
  std::vector<RationalFunction> gauge;
  bool symplectic = true;
  /// Set for a reading that differs from the printed formula.
  bool alternative = false;
  std::string note;

  bool has_inverse() const { return !inverse.empty(); }
  bool moves_times() const;
  /// target -> forward, target times -> time_forward, parameters -> images:
  /// pulls a function of the target variables back to the source side.
  Bindings pullback() const;
  /// Image of `param` (the parameter itself when unlisted).
  RationalFunction param_image(Var param) const;
};

/// Symmetries use the same shape: source and target variables coincide.
using SymmetryTransformation = BirationalMap;

struct DegenerationScheme {
  std::string id;
  std::string source, target;
  /// Old variables -> new variables; `inverse` is required and may use the
  /// old times; `time_inverse` gives old times in the new ones.
  BirationalMap map;
  /// Old parameters in terms of the new parameters and eps.
  Bindings old_params;
  /// New symbols -> target-system symbols, applied after the limit.
  Bindings rename;
  Var eps;
};

/// A map between two registered systems checked by conjugating their flows.
/// `source_params` rewrites the source parameters in the target's.
struct Conjugacy {
  std::string id;
  std::string source, target;
  BirationalMap map;
  Bindings source_params;
};

/// A system given by its vector fields, one per time.
struct FlowSystem {
  std::string name;
  std::vector<Pair> pairs;
  std::vector<Var> times;
  std::vector<VectorField> fields;

  std::vector<Var> phase_vars() const;
};

FlowSystem flows(const HamiltonianSystem& sys);

struct SymplecticResult {
  bool ok = false;
  std::string witness;  // "J^T Omega J entry (i,j) = value, expected e", 1-based
};

/// Checks J^T Omega J = Omega for the phase Jacobian. Throws
/// std::domain_error when the Jacobian determinant vanishes identically.
SymplecticResult check_symplectic(const BirationalMap& m, const std::vector<Pair>& pairs);

RationalFunction determinant(std::vector<std::vector<RationalFunction>> m);

enum class Transport {
  dynamic,        // chain rule including the explicit time derivative of the map
  static_gauged,  // chain rule on the field of H - gauge, no time term
  static_plain,   // chain rule on the field of H, no time term
};

/// Field of the given source time in the target variables. Throws
/// std::invalid_argument when no inverse is stored.
VectorField pushforward_vector_field(const BirationalMap& m, const HamiltonianSystem& sys, std::size_t time_index,
                                     Transport mode = Transport::dynamic);

/// Hamiltonian with H(0) = 0 generating `field`. Throws std::invalid_argument
/// for components that are not polynomial in the phase variables and
/// NotHamiltonian when the field is not closed.
RationalFunction reconstruct_hamiltonian(const VectorField& field, const std::vector<Pair>& pairs);

struct NotHamiltonian : std::domain_error {
  using std::domain_error::domain_error;
};

/// outer after inner. Throws std::invalid_argument when inner's targets are
/// not outer's sources.
BirationalMap compose(const BirationalMap& outer, const BirationalMap& inner);
BirationalMap identity_map(const HamiltonianSystem& sys);
/// Same forward components, time images and parameter images.
bool same_action(const BirationalMap& a, const BirationalMap& b);

/// Source system rewritten in the scheme's new variables, times and
/// parameters, with eps free.
FlowSystem apply_degeneration(const DegenerationScheme& d);
/// Limit eps -> 0 followed by the renaming map.
FlowSystem degeneration_limit(const DegenerationScheme& d);

/// Registered maps. Identifiers are "<system>:<label>".
const std::vector<BirationalMap>& charts(std::string_view system);
const std::vector<SymmetryTransformation>& symmetries(std::string_view system);
/// Any registered map by id: charts, symmetries, the maps of conjugacies()
/// and the steps dVV:g1..g4. Throws std::out_of_range.
const BirationalMap& transform(std::string_view id);
const std::vector<Conjugacy>& conjugacies();
const std::vector<DegenerationScheme>& degeneration_schemes();
const DegenerationScheme& degeneration(std::string_view id);

struct ManifestEntry {
  std::string id;
  std::string kind;  // chart, symmetry, map, degeneration
  std::size_t components;
  bool has_inverse;
  bool moves_times;
  bool alternative;
  std::string note;
};
std::vector<ManifestEntry> manifest();

}  // namespace garnier
