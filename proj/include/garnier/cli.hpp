#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "garnier/numerics.hpp"
#include "garnier/verify.hpp"

namespace garnier::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kConfigError = 2, kRuntimeError = 3 };

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// holomorphy, symmetry, compatibility, poisson, first-integrals,
/// degeneration, conjugacy, mkdv, relations, display, numerics.
const std::vector<std::string>& check_kinds();

struct SuiteConfig {
  std::vector<std::string> systems;  // keys or shell patterns; empty means all
  std::vector<std::string> checks;   // kinds; empty means all
  bool use_constraint = true;
  unsigned jobs = 1;
  std::string out;  // JSON-lines report; empty means none
  std::string ledger;
  std::string mutation;  // id from mutations(); replaces that system

  /// Flat "key = value" lines; '#' starts a comment. Keys: systems, checks,
  /// use-constraint, jobs, out, ledger, mutation. Throws ConfigError.
  static SuiteConfig from_file(const std::string& path);
  static SuiteConfig from_text(const std::string& text);
};

/// Check id -> annotation. Lines "<id> | <annotation>", '#' comments.
class Ledger {
 public:
  static Ledger load(const std::string& path);
  static Ledger parse(const std::string& text);
  const std::string* find(const std::string& id) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::string> entries_;
};

/// Path of the checked-in ledger, fixed at build time.
std::string default_ledger_path();

struct ReportLine {
  CheckReport report;
  std::string kind;
  std::string system;
  std::optional<std::string> ledger;

  /// pass, fail, warn (ledgered fail) or error.
  std::string status() const;
};

struct VerifyResult {
  std::vector<ReportLine> lines;  // ordered by id, then kind
  int exit_code = kPass;
};

/// Resolved system keys for `patterns`; throws ConfigError for a pattern
/// that matches nothing.
std::vector<std::string> resolve_systems(const std::vector<std::string>& patterns,
                                         const std::vector<std::string>& keys);

/// Validates the whole config first (ConfigError), then runs the checks.
VerifyResult run_verify(const SuiteConfig& cfg);

/// One JSON object per line, keys sorted.
std::string report_jsonl(const VerifyResult& r, bool timing = true);
/// "<id> <status>" per line, then witnesses of failures and warnings.
std::string report_text(const VerifyResult& r);

/// One line per system: key, times, pairs, parameters, charts, symmetries.
std::string cmd_list(const std::vector<const HamiltonianSystem*>& systems, const std::string& pattern = "*");
std::string cmd_list(const std::string& pattern = "*");

/// Runs verify, prints the text report to `out` and writes the JSON report
/// to cfg.out. Returns the exit code, mapping errors to kConfigError and
/// kRuntimeError.
int cmd_verify(const SuiteConfig& cfg, std::ostream& out, std::ostream& err);

struct IntegrateConfig {
  std::string system;
  std::string state_file;  // "name = value" lines for times, phase and parameters
  std::string time;        // empty means the first time
  double step = 1e-3;
  double horizon = 1.0;
  bool use_constraint = false;
  std::string out;  // CSV path; empty means none
};

/// Unlisted values are zero. Throws ConfigError for unknown names.
NumericState read_state(const HamiltonianSystem& sys, const std::string& text);

int cmd_integrate(const IntegrateConfig& cfg, std::ostream& out, std::ostream& err);

/// Canonical dump of the selected systems.
std::string cmd_dump(const std::vector<std::string>& patterns);

}  // namespace garnier::cli
