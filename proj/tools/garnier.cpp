#include <iostream>

#include "CLI11.hpp"
#include "garnier/cli.hpp"

using namespace garnier;

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for symmetric Garnier-type Hamiltonian systems"};
  app.require_subcommand(1);

  std::string pattern = "*";
  auto* list = app.add_subcommand("list", "Registered systems with their shapes");
  list->add_option("pattern", pattern, "Shell pattern on system keys");

  cli::SuiteConfig suite;
  std::string config_path;
  std::vector<std::string> systems, checks;
  bool use_constraint = true;
  unsigned jobs = 0;
  std::string out, ledger, mutation;
  auto* verify = app.add_subcommand("verify", "Run check suites");
  verify->add_option("--config", config_path, "Flat key = value config file");
  verify->add_option("--systems", systems, "System keys or patterns")->delimiter(',');
  verify->add_option("--checks", checks, "Check kinds")->delimiter(',');
  auto* constraint_flag = verify->add_flag("--use-constraint,!--no-use-constraint", use_constraint,
                                           "Allow the parameter constraint as a fallback");
  verify->add_option("--jobs", jobs, "Worker threads");
  verify->add_option("--out", out, "JSON-lines report path");
  verify->add_option("--ledger", ledger, "Discrepancy ledger path");
  verify->add_option("--mutation", mutation, "Replace one system by a mutated copy");

  cli::IntegrateConfig integ;
  auto* integrate = app.add_subcommand("integrate", "RK4 along one time of a system");
  integrate->add_option("system", integ.system, "System key")->required();
  integrate->add_option("--state", integ.state_file, "Initial state, name = value lines");
  integrate->add_option("--time", integ.time, "Time variable (default: the first)");
  integrate->add_option("--step", integ.step, "Step size");
  integrate->add_option("--horizon", integ.horizon, "Signed length of the run");
  integrate->add_flag("--use-constraint", integ.use_constraint, "Require the parameters to satisfy the constraint");
  integrate->add_option("--out", integ.out, "Trajectory CSV path");

  std::vector<std::string> dump_systems;
  auto* dump = app.add_subcommand("dump", "Canonical text of the selected systems");
  dump->add_option("--systems", dump_systems, "System keys or patterns")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kPass : cli::kConfigError;
  }

  if (*list) {
    std::cout << cli::cmd_list(pattern);
    return cli::kPass;
  }
  if (*verify) {
    try {
      if (!config_path.empty()) suite = cli::SuiteConfig::from_file(config_path);
    } catch (const cli::ConfigError& e) {
      std::cerr << "config error: " << e.what() << '\n';
      return cli::kConfigError;
    }
    // Command-line flags override the file.
    if (!systems.empty()) suite.systems = systems;
    if (!checks.empty()) suite.checks = checks;
    if (constraint_flag->count() > 0) suite.use_constraint = use_constraint;
    if (jobs > 0) suite.jobs = jobs;
    if (!out.empty()) suite.out = out;
    if (!ledger.empty()) suite.ledger = ledger;
    if (!mutation.empty()) suite.mutation = mutation;
    return cli::cmd_verify(suite, std::cout, std::cerr);
  }
  if (*integrate) return cli::cmd_integrate(integ, std::cout, std::cerr);
  if (*dump) {
    try {
      std::cout << cli::cmd_dump(dump_systems);
    } catch (const cli::ConfigError& e) {
      std::cerr << "config error: " << e.what() << '\n';
      return cli::kConfigError;
    }
  }
  return cli::kPass;
}
