#include "garnier/cli.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "json.hpp"

#ifndef GARNIER_LEDGER_PATH
#define GARNIER_LEDGER_PATH "data/discrepancies.txt"
#endif

namespace garnier::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// "key <sep> value" lines; blank lines and '#' comments skipped.
std::vector<std::pair<std::string, std::string>> key_values(const std::string& text, char sep) {
  std::vector<std::pair<std::string, std::string>> out;
  std::stringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto at = line.find(sep);
    if (at == std::string::npos)
      throw ConfigError("line " + std::to_string(number) + ": expected '" + std::string(1, sep) + "'");
    out.emplace_back(trim(std::string_view(line).substr(0, at)), trim(std::string_view(line).substr(at + 1)));
  }
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "on" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "off" || v == "no" || v == "0") return false;
  throw ConfigError(key + ": expected a boolean, got '" + v + "'");
}

double parse_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double d = 0;
  try {
    d = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) throw ConfigError(key + ": expected a number, got '" + v + "'");
  return d;
}

bool matches(const std::string& pattern, const std::string& key) {
  return fnmatch(pattern.c_str(), key.c_str(), 0) == 0;
}

}  // namespace

const std::vector<std::string>& check_kinds() {
  static const std::vector<std::string> kinds{"holomorphy", "symmetry", "compatibility", "poisson",
                                              "first-integrals", "degeneration", "conjugacy", "mkdv",
                                              "relations", "display", "numerics"};
  return kinds;
}

SuiteConfig SuiteConfig::from_text(const std::string& text) {
  SuiteConfig c;
  for (const auto& [k, v] : key_values(text, '=')) {
    if (k == "systems") c.systems = split_list(v);
    else if (k == "checks") c.checks = split_list(v);
    else if (k == "use-constraint") c.use_constraint = parse_bool(k, v);
    else if (k == "jobs") {
      const double j = parse_double(k, v);
      if (j < 1 || j != std::floor(j)) throw ConfigError("jobs: expected a positive integer");
      c.jobs = static_cast<unsigned>(j);
    } else if (k == "out") c.out = v;
    else if (k == "ledger") c.ledger = v;
    else if (k == "mutation") c.mutation = v;
    else throw ConfigError("unknown config key '" + k + "'");
  }
  return c;
}

SuiteConfig SuiteConfig::from_file(const std::string& path) { return from_text(slurp(path)); }

Ledger Ledger::parse(const std::string& text) {
  Ledger l;
  for (auto& [id, note] : key_values(text, '|')) l.entries_[id] = note;
  return l;
}

Ledger Ledger::load(const std::string& path) { return parse(slurp(path)); }

const std::string* Ledger::find(const std::string& id) const {
  const auto it = entries_.find(id);
  return it == entries_.end() ? nullptr : &it->second;
}

std::string default_ledger_path() { return GARNIER_LEDGER_PATH; }

std::string ReportLine::status() const {
  switch (report.verdict) {
    case Verdict::pass: return "pass";
    case Verdict::error: return "error";
    case Verdict::fail: return ledger ? "warn" : "fail";
  }
  return "error";
}

std::vector<std::string> resolve_systems(const std::vector<std::string>& patterns,
                                         const std::vector<std::string>& keys) {
  if (patterns.empty() || (patterns.size() == 1 && patterns[0] == "all")) return keys;
  std::set<std::string> chosen;
  for (const std::string& p : patterns) {
    bool any = false;
    for (const std::string& k : keys)
      if (matches(p, k)) {
        chosen.insert(k);
        any = true;
      }
    if (!any) throw ConfigError("unknown system '" + p + "'");
  }
  std::vector<std::string> out;
  for (const std::string& k : keys)
    if (chosen.count(k)) out.push_back(k);
  return out;
}

namespace {

struct Task {
  std::string kind, system, label;
  std::function<std::vector<CheckReport>()> run;
};

char hamiltonian_letter(const HamiltonianSystem& sys) { return sys.name == "autoG14" || sys.name == "dV" ? 'K' : 'H'; }

bool needs_constraint(const CheckReport& r) {
  return r.detail.find("with constraint") != std::string::npos;
}

CheckReport benchmark_report(const std::string& id, const NumericState& start, double horizon) {
  CheckReport r;
  r.id = id;
  const auto t0 = std::chrono::steady_clock::now();
  const Benchmark b = autog14_benchmark(start, horizon);
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream m;
  m << std::setprecision(3) << "horizon " << horizon << ", drift K1 " << b.drift[0] << ", K2 " << b.drift[1]
    << ", halving ratio " << b.halving_ratio << ", commutation " << b.commutation << ", endpoint vs reference "
    << b.endpoint_error;
  r.detail = m.str();
  const double drift = std::max(b.drift[0], b.drift[1]);
  std::string why;
  if (b.aborted) why = b.message;
  else if (!(drift <= 1e-8)) why = "drift above 1e-8";
  else if (!(b.halving_ratio >= 8 && b.halving_ratio <= 32)) why = "halving ratio outside [8,32]";
  else if (!(b.commutation <= 1e-6)) why = "flows do not commute within 1e-6";
  if (!why.empty()) {
    r.verdict = Verdict::fail;
    r.witness = why + "; " + r.detail;
  }
  return r;
}

std::vector<Task> plan(const SuiteConfig& cfg, const std::map<std::string, HamiltonianSystem>& systems) {
  std::set<std::string> kinds(cfg.checks.begin(), cfg.checks.end());
  if (kinds.empty() || kinds.count("all")) kinds = {check_kinds().begin(), check_kinds().end()};
  const bool use_constraint = cfg.use_constraint;
  std::vector<Task> tasks;
  auto add = [&](std::string kind, const std::string& system, std::string label,
                 std::function<std::vector<CheckReport>()> run) {
    if (kinds.count(kind)) tasks.push_back({std::move(kind), system, std::move(label), std::move(run)});
  };
  auto one = [](std::function<CheckReport()> f) { return [f] { return std::vector<CheckReport>{f()}; }; };

  for (const auto& [key, sys] : systems) {
    const HamiltonianSystem* s = &sys;
    for (const BirationalMap& c : charts(key)) {
      const BirationalMap* chart = &c;
      add("holomorphy", key, c.id, [s, chart] {
        auto out = check_chart(*s, *chart);
        auto gauge = check_gauge(*s, *chart);
        out.insert(out.end(), gauge.begin(), gauge.end());
        return out;
      });
    }
    if (key == "G11111") {
      add("holomorphy", key, "printed gauge", [s] {
        BirationalMap printed = transform("G11111:chart6");
        printed.id = "G11111:chart6-printed";
        printed.gauge[1] = parse("(1-x/t)*w");
        auto all = check_gauge(*s, printed);
        std::vector<CheckReport> out;
        for (auto& r : all)
          if (r.id == printed.id + ":gauge:s") out.push_back(r);
        return out;
      });
    }
    for (const SymmetryTransformation& g : symmetries(key)) {
      const SymmetryTransformation* gp = &g;
      add("symmetry", key, g.id, one([s, gp, use_constraint] {
            if (use_constraint) return check_symmetry(*s, *gp);
            CheckReport r = check_symmetry(*s, *gp, false);
            r.id = gp->id;
            return r;
          }));
    }
    if (sys.times.size() > 1) add("compatibility", key, "flows", one([s] { return check_commuting_flows(*s); }));

    const auto integrals = registered_integrals(sys);
    const char letter = hamiltonian_letter(sys);
    if (integrals.size() > 1) {
      add("poisson", key, "brackets", [s, letter] {
        std::vector<CheckReport> out;
        for (std::size_t a = 0; a < s->hamiltonians.size(); ++a)
          for (std::size_t b = a + 1; b < s->hamiltonians.size(); ++b) {
            CheckReport r;
            r.id = s->name + ":{" + letter + std::to_string(a + 1) + "," + letter + std::to_string(b + 1) + "}=0";
            const auto t0 = std::chrono::steady_clock::now();
            const RationalFunction br = poisson_bracket(s->hamiltonians[a], s->hamiltonians[b], s->pairs);
            r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            if (!br.is_zero()) {
              r.verdict = Verdict::fail;
              r.witness = "bracket = " + br.to_string();
            }
            out.push_back(r);
          }
        return out;
      });
    }
    for (std::size_t i = 0; i < integrals.size(); ++i) {
      add("first-integrals", key, integrals[i].name, one([s, i, letter] {
            CheckReport r = check_first_integrals(*s, s->hamiltonians[i]);
            r.id = s->name + ":integral:" + letter + std::to_string(i + 1);
            return r;
          }));
    }
    if (key == "autoG14") {
      add("mkdv", key, "mkdv", [] { return check_mkdv_reduction(); });
      add("relations", key, "D3 relations", [] {
        std::vector<CheckReport> out;
        for (auto& rr : check_autog14_relations()) out.push_back(rr.report);
        return out;
      });
      add("numerics", key, "benchmark",
          one([] { return benchmark_report("autoG14:rk4-benchmark", autog14_benchmark_start(), 1.0); }));
      add("numerics", key, "benchmark reversed",
          one([] { return benchmark_report("autoG14:rk4-benchmark-reversed", autog14_benchmark_start(), -1.0); }));
    }
    if (key == "Kimura-times") {
      add("display", key, "display", one([s] {
            return check_displayed_field("Kimura-times:display", *s, kimura_displayed_field(false));
          }));
      add("display", key, "display literal", one([s] {
            return check_displayed_field("Kimura-times:display-literal", *s, kimura_displayed_field(true));
          }));
    }
    if (key == "dVV") add("conjugacy", key, "pi3", one([] { return check_pi3_composition(); }));
  }

  for (const DegenerationScheme& d : degeneration_schemes()) {
    if (!systems.count(d.source) && !systems.count(d.target)) continue;
    const DegenerationScheme* dp = &d;
    add("degeneration", d.source, d.id, one([dp] { return check_degeneration(*dp); }));
  }
  for (const Conjugacy& c : conjugacies()) {
    if (!systems.count(c.source) && !systems.count(c.target)) continue;
    const Conjugacy* cp = &c;
    add("conjugacy", c.source, c.id, one([cp] { return check_conjugacy(*cp); }));
  }
  return tasks;
}

std::vector<ReportLine> run_task(const Task& t) {
  std::vector<CheckReport> reports;
  try {
    reports = t.run();
  } catch (const std::exception& e) {
    CheckReport r;
    r.id = t.label;
    r.verdict = Verdict::error;
    r.witness = e.what();
    reports.push_back(r);
  }
  std::vector<ReportLine> out;
  for (auto& r : reports) out.push_back({std::move(r), t.kind, t.system, std::nullopt});
  return out;
}

}  // namespace

VerifyResult run_verify(const SuiteConfig& cfg) {
  for (const std::string& k : cfg.checks)
    if (k != "all" && std::find(check_kinds().begin(), check_kinds().end(), k) == check_kinds().end())
      throw ConfigError("unknown check kind '" + k + "'");
  if (cfg.jobs == 0) throw ConfigError("jobs must be positive");
  std::vector<std::string> keys = resolve_systems(cfg.systems, registry_keys());

  std::map<std::string, HamiltonianSystem> systems;
  for (const std::string& k : keys) systems.emplace(k, registry_get(k));
  if (!cfg.mutation.empty()) {
    const auto& all = mutations();
    const auto it = std::find_if(all.begin(), all.end(), [&](const Mutation& m) { return m.id == cfg.mutation; });
    if (it == all.end()) throw ConfigError("unknown mutation '" + cfg.mutation + "'");
    systems.insert_or_assign(it->system, mutate(*it));
  }

  Ledger ledger;
  if (!cfg.ledger.empty()) ledger = Ledger::load(cfg.ledger);
  else if (std::ifstream(default_ledger_path())) ledger = Ledger::load(default_ledger_path());

  const std::vector<Task> tasks = plan(cfg, systems);
  std::vector<std::vector<ReportLine>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = run_task(tasks[i]);
  };
  const unsigned n = std::min<std::size_t>(cfg.jobs, std::max<std::size_t>(tasks.size(), 1));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
  }

  VerifyResult out;
  for (auto& part : results)
    for (auto& line : part) {
      if (!cfg.use_constraint && line.report.passed() && needs_constraint(line.report)) {
        line.report.verdict = Verdict::fail;
        line.report.witness = "holds only " + line.report.detail;
      }
      if (const std::string* note = ledger.find(line.report.id)) line.ledger = *note;
      out.lines.push_back(std::move(line));
    }
  std::stable_sort(out.lines.begin(), out.lines.end(), [](const ReportLine& a, const ReportLine& b) {
    return std::tie(a.report.id, a.kind) < std::tie(b.report.id, b.kind);
  });
  for (const ReportLine& l : out.lines) {
    const std::string st = l.status();
    if (st == "error") out.exit_code = kRuntimeError;
    else if (st == "fail" && out.exit_code == kPass) out.exit_code = kFail;
  }
  return out;
}

std::string report_jsonl(const VerifyResult& r, bool timing) {
  std::string out;
  for (const ReportLine& l : r.lines) {
    nlohmann::json j;
    j["id"] = l.report.id;
    j["kind"] = l.kind;
    j["system"] = l.system;
    j["verdict"] = to_string(l.report.verdict);
    j["status"] = l.status();
    j["witness"] = l.report.witness;
    j["detail"] = l.report.detail;
    j["ledger"] = l.ledger ? nlohmann::json(*l.ledger) : nlohmann::json(nullptr);
    if (timing) j["millis"] = l.report.millis;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string report_text(const VerifyResult& r) {
  std::ostringstream out;
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const ReportLine& l : r.lines) {
    const std::string st = l.status();
    out << l.report.id << ' ' << st << '\n';
    counts[st == "pass" ? 0 : st == "warn" ? 1 : st == "fail" ? 2 : 3]++;
  }
  for (const ReportLine& l : r.lines) {
    if (l.report.passed()) continue;
    out << l.status() << ' ' << l.report.id << ": " << l.report.witness << '\n';
    if (l.ledger) out << "  ledger: " << *l.ledger << '\n';
  }
  out << counts[0] << " pass, " << counts[1] << " warn, " << counts[2] << " fail, " << counts[3] << " error\n";
  return out.str();
}

std::string cmd_list(const std::vector<const HamiltonianSystem*>& systems, const std::string& pattern) {
  std::ostringstream out;
  for (const HamiltonianSystem* s : systems) {
    if (!matches(pattern, s->name)) continue;
    out << s->name << " times=" << s->times.size() << " pairs=" << s->pairs.size()
        << " params=" << s->params.size() << " charts=" << charts(s->name).size()
        << " symmetries=" << symmetries(s->name).size() << '\n';
  }
  return out.str();
}

std::string cmd_list(const std::string& pattern) {
  std::vector<const HamiltonianSystem*> all;
  for (const std::string& k : registry_keys()) all.push_back(&registry_get(k));
  return cmd_list(all, pattern);
}

int cmd_verify(const SuiteConfig& cfg, std::ostream& out, std::ostream& err) {
  VerifyResult r;
  try {
    r = run_verify(cfg);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "runtime error: " << e.what() << '\n';
    return kRuntimeError;
  }
  out << report_text(r);
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out);
    f << report_jsonl(r);
    if (!f) {
      err << "cannot write " << cfg.out << '\n';
      return kRuntimeError;
    }
  }
  return r.exit_code;
}

NumericState read_state(const HamiltonianSystem& sys, const std::string& text) {
  NumericState s = NumericState::zero(sys);
  for (const auto& [k, v] : key_values(text, '=')) {
    const auto var = Var::find(k);
    if (!var) throw ConfigError("unknown symbol '" + k + "'");
    try {
      s.set(*var, parse_double(k, v));
    } catch (const std::out_of_range&) {
      throw ConfigError(k + " is not a time, phase variable or parameter of " + sys.name);
    }
  }
  return s;
}

int cmd_integrate(const IntegrateConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const auto& keys = registry_keys();
    if (std::find(keys.begin(), keys.end(), cfg.system) == keys.end())
      throw ConfigError("unknown system '" + cfg.system + "'");
    const HamiltonianSystem& sys = registry_get(cfg.system);
    if (!(cfg.step > 0)) throw ConfigError("step must be positive");
    const NumericState start = cfg.state_file.empty() ? NumericState::zero(sys) : read_state(sys, slurp(cfg.state_file));
    if (cfg.use_constraint) {
      try {
        require_constraint(sys, start);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    }
    std::size_t ti = 0;
    if (!cfg.time.empty()) {
      const auto v = Var::find(cfg.time);
      const auto it = v ? std::find(sys.times.begin(), sys.times.end(), *v) : sys.times.end();
      if (it == sys.times.end()) throw ConfigError("'" + cfg.time + "' is not a time of " + sys.name);
      ti = static_cast<std::size_t>(it - sys.times.begin());
    }
    const Trajectory traj = integrate_flow(sys, ti, start, start.times[ti] + cfg.horizon, cfg.step);
    const auto integrals = registered_integrals(sys);
    if (!cfg.out.empty()) {
      std::ofstream f(cfg.out);
      write_csv(f, traj, integrals);
      if (!f) throw std::runtime_error("cannot write " + cfg.out);
    }
    const auto drift = drift_report(integrals, traj);
    out << sys.name << ' ' << sys.times[ti].name() << " steps=" << traj.states.size() - 1 << '\n';
    out << std::setprecision(3);
    for (std::size_t i = 0; i < integrals.size(); ++i) out << integrals[i].name << " drift " << drift[i] << '\n';
    if (integrals.empty()) out << "no registered integrals\n";
    if (traj.aborted) {
      err << "aborted: " << traj.message << '\n';
      return kRuntimeError;
    }
    return kPass;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "runtime error: " << e.what() << '\n';
    return kRuntimeError;
  }
}

std::string cmd_dump(const std::vector<std::string>& patterns) {
  std::string out;
  for (const std::string& k : resolve_systems(patterns, registry_keys())) out += dump(registry_get(k));
  return out;
}

}  // namespace garnier::cli
