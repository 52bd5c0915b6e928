#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include "garnier/cli.hpp"

namespace garnier::cli {
namespace {

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

TEST(List, DefaultIncludesAutoG14Shape) {
  const std::string out = cmd_list();
  EXPECT_NE(out.find("autoG14 times=2 pairs=2 params=3"), std::string::npos) << out;
  EXPECT_EQ(count_lines(out), registry_keys().size());
}

TEST(List, PatternFilter) {
  const std::string out = cmd_list("SdeG*");
  std::istringstream in(out);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line); ++n) EXPECT_EQ(line.rfind("SdeG", 0), 0U) << line;
  EXPECT_EQ(n, 7U);
}

TEST(List, EmptyRegistry) { EXPECT_EQ(cmd_list({}, "*"), ""); }

TEST(Config, FlatKeyValue) {
  const SuiteConfig c = SuiteConfig::from_text(
      "# comment\nsystems = autoG14, dVV\nchecks=symmetry\nuse-constraint = off\njobs = 3\nout = r.jsonl\n");
  EXPECT_EQ(c.systems, (std::vector<std::string>{"autoG14", "dVV"}));
  EXPECT_EQ(c.checks, (std::vector<std::string>{"symmetry"}));
  EXPECT_FALSE(c.use_constraint);
  EXPECT_EQ(c.jobs, 3U);
  EXPECT_EQ(c.out, "r.jsonl");
}

TEST(Config, Rejections) {
  EXPECT_THROW(SuiteConfig::from_text("colour = red\n"), ConfigError);
  EXPECT_THROW(SuiteConfig::from_text("use-constraint = maybe\n"), ConfigError);
  EXPECT_THROW(SuiteConfig::from_text("jobs = 0\n"), ConfigError);
  EXPECT_THROW(SuiteConfig::from_text("systems\n"), ConfigError);
  EXPECT_THROW(SuiteConfig::from_file("/nonexistent/config"), ConfigError);
}

TEST(Config, UnknownNamesRejectedBeforeWork) {
  SuiteConfig c;
  c.systems = {"autoG14", "G99"};
  EXPECT_THROW(run_verify(c), ConfigError);
  c.systems = {"autoG14"};
  c.checks = {"holomorphy", "astrology"};
  EXPECT_THROW(run_verify(c), ConfigError);
  c.checks = {};
  c.mutation = "nope";
  EXPECT_THROW(run_verify(c), ConfigError);
  std::ostringstream out, err;
  c.mutation.clear();
  c.systems = {"G99"};
  EXPECT_EQ(cmd_verify(c, out, err), kConfigError);
  EXPECT_TRUE(out.str().empty());
}

TEST(Config, Patterns) {
  const auto keys = resolve_systems({"SdeGa*"}, registry_keys());
  EXPECT_EQ(keys, (std::vector<std::string>{"SdeGa", "SdeGaH-3v", "SdeGaK"}));
  EXPECT_EQ(resolve_systems({"all"}, registry_keys()).size(), registry_keys().size());
}

TEST(Ledger, Parse) {
  const Ledger l = Ledger::parse("# header\na:b | typo one\n\nc | typo two\n");
  EXPECT_EQ(l.size(), 2U);
  ASSERT_NE(l.find("a:b"), nullptr);
  EXPECT_EQ(*l.find("a:b"), "typo one");
  EXPECT_EQ(l.find("zzz"), nullptr);
  EXPECT_GT(Ledger::load(default_ledger_path()).size(), 0U);
}

TEST(Verify, AutoG14All) {
  SuiteConfig c;
  c.systems = {"autoG14"};
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify(c, out, err), kPass) << out.str() << err.str();
  EXPECT_NE(out.str().find("autoG14:{K1,K2}=0 pass"), std::string::npos);
  EXPECT_NE(out.str().find("mkdv:mkdv-and-chazy pass"), std::string::npos);
}

TEST(Verify, DegenerationEdges) {
  SuiteConfig c;
  c.checks = {"degeneration"};
  const VerifyResult r = run_verify(c);
  EXPECT_EQ(r.exit_code, kPass);
  ASSERT_EQ(r.lines.size(), 4U);
  for (const auto& l : r.lines) EXPECT_EQ(l.status(), "pass") << l.report.id;
}

TEST(Verify, MutatedFixtureFails) {
  SuiteConfig c;
  c.systems = {"autoG14"};
  c.checks = {"compatibility", "holomorphy"};
  c.mutation = "autoG14:H1:t0";
  const VerifyResult r = run_verify(c);
  EXPECT_EQ(r.exit_code, kFail);
  bool witnessed = false;
  for (const auto& l : r.lines) witnessed = witnessed || (l.status() == "fail" && !l.report.witness.empty());
  EXPECT_TRUE(witnessed);
}

TEST(Verify, LedgerTurnsPrintedTyposIntoWarnings) {
  SuiteConfig c;
  c.systems = {"uraS"};
  c.checks = {"symmetry"};
  const VerifyResult with = run_verify(c);
  EXPECT_EQ(with.exit_code, kPass);
  bool warned = false;
  for (const auto& l : with.lines)
    if (l.report.id == "uraS:u1") warned = l.status() == "warn" && l.ledger.has_value();
  EXPECT_TRUE(warned);

  c.ledger = temp_file("empty_ledger.txt", "# nothing\n");
  EXPECT_EQ(run_verify(c).exit_code, kFail);
}

TEST(Verify, ConstraintFlag) {
  SuiteConfig c;
  c.systems = {"dV"};
  c.checks = {"holomorphy"};
  EXPECT_EQ(run_verify(c).exit_code, kPass);
  c.use_constraint = false;
  const VerifyResult r = run_verify(c);
  EXPECT_EQ(r.exit_code, kFail);
  for (const auto& l : r.lines)
    if (l.status() == "fail") EXPECT_NE(l.report.witness.find("holds only with constraint"), std::string::npos);
}

TEST(Verify, DeterministicAcrossJobs) {
  SuiteConfig c;
  c.systems = {"autoG14", "SdeG4", "dVV"};
  const std::string serial = report_jsonl(run_verify(c), false);
  c.jobs = 3;
  const std::string parallel = report_jsonl(run_verify(c), false);
  EXPECT_EQ(serial, parallel);
  EXPECT_EQ(serial, report_jsonl(run_verify(c), false));
  EXPECT_EQ(serial.find("millis"), std::string::npos);
}

TEST(Verify, ReportSortedById) {
  SuiteConfig c;
  c.systems = {"SdeG4"};
  const VerifyResult r = run_verify(c);
  for (std::size_t i = 1; i < r.lines.size(); ++i) EXPECT_LE(r.lines[i - 1].report.id, r.lines[i].report.id);
  const std::string json = report_jsonl(r);
  EXPECT_EQ(count_lines(json), r.lines.size());
  EXPECT_NE(json.find("\"millis\""), std::string::npos);
}

TEST(Verify, WritesReportFile) {
  SuiteConfig c;
  c.systems = {"SdeG4"};
  c.checks = {"compatibility"};
  c.out = ::testing::TempDir() + "report.jsonl";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify(c, out, err), kPass);
  std::ifstream in(c.out);
  std::string line;
  std::getline(in, line);
  EXPECT_NE(line.find("\"id\":\"SdeG4:compatibility\""), std::string::npos) << line;
  c.out = "/nonexistent/dir/report.jsonl";
  EXPECT_EQ(cmd_verify(c, out, err), kRuntimeError);
}

TEST(Integrate, ReversedBenchmarkThroughStateFile) {
  IntegrateConfig c;
  c.system = "autoG14";
  c.state_file = temp_file("state.txt", "q1 = 1\np1 = 1\nq2 = 1\np2 = 1\na0 = 0.25\na1 = -0.5\na2 = 0.25\n");
  c.horizon = -1;
  c.use_constraint = true;
  c.out = ::testing::TempDir() + "trajectory.csv";
  std::ostringstream out, err;
  ASSERT_EQ(cmd_integrate(c, out, err), kPass) << err.str();
  std::smatch m;
  const std::string text = out.str();
  ASSERT_TRUE(std::regex_search(text, m, std::regex("H1 drift ([0-9.e+-]+)")));
  EXPECT_LE(std::stod(m[1]), 1e-8);
  std::ifstream csv(c.out);
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "t,s,q1,p1,q2,p2,H1,H2");
}

TEST(Integrate, SingularStateAborts) {
  IntegrateConfig c;
  c.system = "dV";
  c.state_file = temp_file("singular.txt", "x = 1\ny = 1\nz = 2\nw = 1\n");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_integrate(c, out, err), kRuntimeError);
  EXPECT_NE(err.str().find("denominator t^2"), std::string::npos) << err.str();
}

TEST(Integrate, ConfigErrors) {
  std::ostringstream out, err;
  IntegrateConfig c;
  c.system = "G99";
  EXPECT_EQ(cmd_integrate(c, out, err), kConfigError);
  c.system = "autoG14";
  c.step = -1;
  EXPECT_EQ(cmd_integrate(c, out, err), kConfigError);
  c.step = 1e-3;
  c.time = "u";
  EXPECT_EQ(cmd_integrate(c, out, err), kConfigError);
  c.time.clear();
  c.state_file = temp_file("bad_state.txt", "zeta = 1\n");
  EXPECT_EQ(cmd_integrate(c, out, err), kConfigError);
  c.state_file = temp_file("off_constraint.txt", "a0 = 1\n");
  c.use_constraint = true;
  EXPECT_EQ(cmd_integrate(c, out, err), kConfigError);
}

TEST(Dump, SelectedSystems) {
  const std::string d = cmd_dump({"autoG14"});
  EXPECT_EQ(d, dump(registry_get("autoG14")));
  EXPECT_THROW(cmd_dump({"G99"}), ConfigError);
}

}  // namespace
}  // namespace garnier::cli
