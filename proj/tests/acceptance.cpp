// Acceptance run: one PASS/FAIL line per criterion. Exits non-zero only when a
// criterion fails without a ledger entry explaining it.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "garnier/cli.hpp"
#include "garnier/numerics.hpp"
#include "garnier/verify.hpp"

namespace {

using namespace garnier;

struct Outcome {
  bool pass = false;
  std::string detail;
  std::string ledger_id;  // consulted when the criterion fails
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

Outcome poisson() {
  const auto start = std::chrono::steady_clock::now();
  const auto& sys = registry_get("autoG14");
  const bool zero = poisson_bracket(sys.hamiltonians[0], sys.hamiltonians[1], sys.pairs).is_zero();
  const double t = seconds_since(start);
  return {zero && t < 1.0, "{K1,K2} " + std::string(zero ? "= 0" : "!= 0") + " in " + fmt("%.3f s", t), {}};
}

Outcome compatibility() {
  const auto start = std::chrono::steady_clock::now();
  Outcome o{true, {}, {}};
  for (const char* key : {"autoG14", "dVV", "SdeG3", "SdeG4"}) {
    const CheckReport r = check_commuting_flows(registry_get(key));
    o.pass = o.pass && r.passed();
    o.detail += std::string(key) + "=" + to_string(r.verdict) + " ";
  }
  const double t = seconds_since(start);
  o.pass = o.pass && t < 60;
  o.detail += "in " + fmt("%.2f s", t);
  return o;
}

// Counts verify lines for one check kind across all systems.
Outcome suite(const std::vector<std::string>& checks, double limit) {
  const auto start = std::chrono::steady_clock::now();
  cli::SuiteConfig c;
  c.checks = checks;
  const cli::VerifyResult r = cli::run_verify(c);
  std::size_t pass = 0, warn = 0, fail = 0;
  for (const auto& l : r.lines) {
    const std::string s = l.status();
    (s == "pass" ? pass : s == "warn" ? warn : fail) += 1;
  }
  const double t = seconds_since(start);
  std::ostringstream d;
  d << pass << " pass, " << warn << " ledgered warnings, " << fail << " fail in " << fmt("%.2f s", t);
  return {fail == 0 && pass > 0 && t < limit, d.str(), {}};
}

Outcome degenerations() {
  Outcome o{true, {}, {}};
  for (const char* id : {"uraS->dVV", "dVV->SdeG3", "dVV->SdeGa", "SdeG3->SdeG4"}) {
    const CheckReport r = check_degeneration(degeneration(id));
    o.pass = o.pass && r.passed();
    o.detail += std::string(id) + "=" + to_string(r.verdict) + " ";
  }
  return o;
}

Outcome okamoto() {
  for (const auto& c : conjugacies())
    if (c.id == "G11111:S") {
      const CheckReport r = check_conjugacy(c);
      return {r.passed(), c.source + " -> " + c.target + " " + to_string(r.verdict) + " " + r.detail, {}};
    }
  return {false, "G11111:S not registered", {}};
}

Outcome pi3() {
  const CheckReport r = check_pi3_composition();
  return {r.passed(), r.detail + (r.witness.empty() ? "" : " " + r.witness), {}};
}

Outcome symmetry_suites(const cli::Ledger& ledger) {
  std::size_t listed = 0, passed = 0, ledgered = 0, relations_ok = 0, relations = 0;
  std::string unexplained;
  for (const char* key :
       {"uraS", "SdeGH-3v", "dVV", "deGHS", "SdeG3", "SdeGa", "ASdeGa", "SdeG4", "autoG14", "SdeGaK"}) {
    const auto& sys = registry_get(key);
    for (const auto& g : symmetries(key)) {
      if (g.alternative) continue;
      ++listed;
      const CheckReport r = check_symmetry(sys, g);
      if (r.passed())
        ++passed;
      else if (ledger.find(g.id) != nullptr && !r.witness.empty())
        ++ledgered;
      else
        unexplained += " " + g.id;
    }
  }
  for (const auto& rr : check_autog14_relations()) {
    ++relations;
    relations_ok += rr.report.passed() ? 1 : 0;
  }
  const double share = listed == 0 ? 0 : static_cast<double>(passed) / static_cast<double>(listed);
  std::ostringstream d;
  d << passed << "/" << listed << " pass outright (" << fmt("%.1f%%", 100 * share) << "), " << ledgered
    << " ledgered, relations " << relations_ok << "/" << relations;
  if (!unexplained.empty()) d << ", unexplained:" << unexplained;
  return {share >= 0.9 && unexplained.empty() && relations_ok == relations, d.str(), {}};
}

Outcome mkdv() {
  Outcome o{true, {}, {}};
  for (const auto& r : check_mkdv_reduction()) {
    o.pass = o.pass && r.passed();
    o.detail += r.id + "=" + to_string(r.verdict) + " ";
  }
  return o;
}

bool meets(const Benchmark& b) {
  auto max2 = [](const std::vector<double>& v) { return v.size() < 2 ? 1.0 : std::max(v[0], v[1]); };
  return !b.aborted && max2(b.drift) <= 1e-8 && max2(b.reference_drift) <= 1e-8 && b.halving_ratio >= 8 &&
         b.halving_ratio <= 32 && b.commutation <= 1e-6;
}

std::string describe(const Benchmark& b) {
  std::ostringstream d;
  if (b.aborted) d << "aborted (" << b.message << "); ";
  if (b.drift.size() == 2)
    d << "drift " << fmt("%.2e", std::max(b.drift[0], b.drift[1])) << ", halving ratio "
      << fmt("%.1f", b.halving_ratio) << ", commutation " << fmt("%.1e", b.commutation);
  return d.str();
}

Outcome numerics() {
  const Benchmark stated = autog14_benchmark(autog14_benchmark_start(), 1.0);
  const Benchmark reversed = autog14_benchmark(autog14_benchmark_start(), -1.0);
  return {meets(stated),
          "horizon +1: " + describe(stated) + " | horizon -1 (info): " + describe(reversed),
          "autoG14:rk4-benchmark"};
}

Outcome mutation_control() {
  std::size_t caught = 0;
  std::string missed;
  for (const auto& m : mutations()) {
    if (check_mutation(m).passed())
      ++caught;
    else
      missed += " " + m.id;
  }
  const std::size_t n = mutations().size();
  return {n >= 10 && caught == n, std::to_string(caught) + "/" + std::to_string(n) + " caught" + missed, {}};
}

}  // namespace

int main() {
  const cli::Ledger ledger = cli::Ledger::load(cli::default_ledger_path());
  const std::vector<std::function<Outcome()>> criteria{
      poisson,
      compatibility,
      [] { return suite({"holomorphy"}, 600); },
      degenerations,
      okamoto,
      pi3,
      [&] { return symmetry_suites(ledger); },
      mkdv,
      numerics,
      mutation_control,
  };
  int unexplained = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what(), {}};
    }
    std::string note;
    if (!o.pass) {
      const std::string* entry = o.ledger_id.empty() ? nullptr : ledger.find(o.ledger_id);
      if (entry != nullptr)
        note = " [ledgered " + o.ledger_id + ": " + *entry + "]";
      else
        ++unexplained;
    }
    std::printf("criterion %zu: %s: %s%s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str(), note.c_str());
    std::fflush(stdout);
  }
  return unexplained == 0 ? 0 : 1;
}
