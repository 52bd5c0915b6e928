#pragma once

#include <complex>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "garnier/catalog.hpp"

namespace garnier {

/// Raised when a denominator falls below the singularity guard. The message
/// names the denominator.
struct NearSingular : std::domain_error {
  using std::domain_error::domain_error;
};

inline constexpr double kSingularityGuard = 1e-12;

/// Values of the times, phase variables and parameters of one system.
struct NumericState {
  std::vector<Var> time_vars, phase_vars, param_vars;
  std::vector<double> times, phase, params;

  /// All values zero, laid out for `sys`.
  static NumericState zero(const HamiltonianSystem& sys);
  /// Throws std::out_of_range when `v` is not part of the state.
  double get(Var v) const;
  void set(Var v, double value);
  bool matches(const HamiltonianSystem& sys) const;
};

/// Throws std::invalid_argument when the system has a constraint and the
/// parameters miss it by more than `tol`.
void require_constraint(const HamiltonianSystem& sys, const NumericState& s, double tol = kSingularityGuard);

/// A rational function prepared for repeated floating evaluation: numerator
/// and denominator as nested Horner schemes.
class CompiledRational {
 public:
  explicit CompiledRational(const RationalFunction& f);
  CompiledRational(const CompiledRational&);
  CompiledRational(CompiledRational&&) noexcept;
  CompiledRational& operator=(CompiledRational) noexcept;
  ~CompiledRational();

  bool is_complex() const { return complex_; }
  /// Throws NearSingular, and std::domain_error when the expression has
  /// non-real coefficients.
  double operator()(const NumericState& s) const;
  std::complex<double> complex_value(const NumericState& s) const;
  /// Real value at a point indexed by variable id; no support check.
  double value_at(const double* point) const;

 private:
  struct Node;
  std::unique_ptr<Node> num_, den_;
  std::string den_text_;
  bool complex_ = false;
  VarSet support_;
};

double evaluate(const RationalFunction& f, const NumericState& at);

struct Trajectory {
  std::vector<NumericState> states;  // initial state first
  bool aborted = false;
  std::string message;  // why the run stopped early

  const NumericState& last() const { return states.back(); }
};

/// Classical fixed-step RK4 along time `time_index` from the state's current
/// time to `to_time`. The last step is shortened so the run ends on
/// `to_time`. A singular or non-finite stage stops the run; the trajectory
/// then ends with the last good state. Throws std::invalid_argument for a
/// non-positive step, a state that does not fit the system, or complex
/// coefficients.
Trajectory integrate_flow(const HamiltonianSystem& sys, std::size_t time_index, const NumericState& from,
                          double to_time, double step);

struct NamedIntegral {
  std::string name;
  RationalFunction f;
};
/// The Hamiltonians when none depends on a time, otherwise nothing.
std::vector<NamedIntegral> registered_integrals(const HamiltonianSystem& sys);

/// Max over the trajectory of |f(state) - f(initial)| per integral. Throws
/// std::invalid_argument for an empty trajectory.
std::vector<double> drift_report(const std::vector<NamedIntegral>& integrals, const Trajectory& traj);

/// Header row of times, phase variables and integral names, one row per state.
void write_csv(std::ostream& out, const Trajectory& traj, const std::vector<NamedIntegral>& integrals);

/// The autoG14 desk benchmark: RK4 along t from `start` over `horizon`,
/// repeated at half the step and at `reference_step`, then t-then-s against
/// s-then-t over the same horizon. Runs that abort still report drift over
/// the part they covered.
struct Benchmark {
  double horizon = 1.0;
  double step = 1e-3;
  double reference_step = 1e-5;
  std::vector<double> drift;       // K1, K2 at `step`
  std::vector<double> drift_half;  // K1, K2 at step/2
  std::vector<double> reference_drift;
  double halving_ratio = 0;   // K1 drift at step over K1 drift at step/2
  double endpoint_error = 0;  // max |state(step) - state(reference_step)|
  double commutation = 0;     // max |t-then-s - s-then-t| at `step`
  bool aborted = false;
  std::string message;  // first abort message
};
/// (q1,p1,q2,p2) = (1,1,1,1) with a0 = a2 = 1/4 and a1 = -1/2, times zero.
NumericState autog14_benchmark_start();
Benchmark autog14_benchmark(const NumericState& start, double horizon = 1.0, double step = 1e-3,
                            double reference_step = 1e-5);

}  // namespace garnier
