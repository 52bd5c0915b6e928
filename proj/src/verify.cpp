#include "garnier/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

namespace garnier {

namespace {

using Clock = std::chrono::steady_clock;

// Times the body and fills verdict/witness from its result.
CheckReport timed(std::string id, const std::function<void(CheckReport&)>& body) {
  CheckReport r;
  r.id = std::move(id);
  const auto start = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.verdict = Verdict::error;
    r.witness = e.what();
  }
  r.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return r;
}

void fail(CheckReport& r, std::string witness) {
  r.verdict = Verdict::fail;
  r.witness = std::move(witness);
}

VarSet set_of(const std::vector<Var>& vars) {
  VarSet s;
  for (Var v : vars) s.set(v.id());
  return s;
}

bool polynomial_in(const RationalFunction& f, const VarSet& vars) { return (f.den().support() & vars).none(); }

std::string name(Var v) { return std::string(v.name()); }

// (V . grad) f over the phase variables.
RationalFunction directional(const VectorField& field, const std::vector<Var>& vars, const RationalFunction& f) {
  RationalFunction out;
  for (std::size_t j = 0; j < vars.size(); ++j)
    if (!field[j].is_zero() && f.depends_on(vars[j])) out += field[j] * f.derivative(vars[j]);
  return out;
}

Bindings elimination_or_empty(const HamiltonianSystem& sys) {
  return sys.constraint ? sys.constraint->elimination() : Bindings{};
}

RationalFunction time_image(const BirationalMap& m, Var t) {
  for (std::size_t k = 0; k < m.time_forward.size(); ++k)
    if (m.target_times[k] == t) return m.time_forward[k];
  return RationalFunction::variable(t);
}

// LHS - RHS of the flow identity for a map from `src` flows to `dst` flows.
// `pre` is applied to the source side (field and map) first.
std::vector<Residual> flow_residuals(const FlowSystem& src, const FlowSystem& dst, const BirationalMap& m,
                                     const Bindings& pre, const Bindings& post) {
  const std::vector<Var> vars = src.phase_vars();
  std::vector<RationalFunction> forward;
  for (const auto& f : m.forward) forward.push_back(pre.empty() ? f : substitute(f, pre));

  // Target side evaluated along the map: target vars, target times, params.
  Bindings along = m.pullback();
  for (std::size_t k = 0; k < m.target.size(); ++k) along[k].second = forward[k];
  if (!pre.empty())
    for (std::size_t k = m.target.size(); k < along.size(); ++k) along[k].second = substitute(along[k].second, pre);

  std::vector<VectorField> target_along;
  for (const auto& field : dst.fields) {
    VectorField v;
    for (const auto& c : field) v.push_back(substitute(c, along));
    target_along.push_back(std::move(v));
  }

  std::vector<Residual> out;
  for (std::size_t b = 0; b < src.times.size(); ++b) {
    VectorField field = src.fields[b];
    if (!pre.empty())
      for (auto& c : field) c = substitute(c, pre);
    const Var tb = src.times[b];
    for (std::size_t i = 0; i < forward.size(); ++i) {
      RationalFunction lhs = forward[i].derivative(tb) + directional(field, vars, forward[i]);
      RationalFunction rhs;
      for (std::size_t a = 0; a < dst.times.size(); ++a) {
        const RationalFunction factor = time_image(m, dst.times[a]).derivative(tb);
        if (!factor.is_zero()) rhs += factor * target_along[a][i];
      }
      RationalFunction res = lhs - rhs;
      if (!post.empty()) res = substitute(res, post);
      if (!res.is_zero()) out.push_back({b, i, std::move(res)});
    }
  }
  return out;
}

std::string describe(const Residual& r, const std::vector<Var>& times, const std::vector<Var>& target) {
  return "d" + name(target[r.component]) + "/d" + name(times[r.time_index]) + " residual " + r.value.to_string();
}

FlowSystem as_flows(const HamiltonianSystem& sys) { return flows(sys); }

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::error:
      return "error";
  }
  return "?";
}

RationalFunction poisson_bracket(const RationalFunction& f, const RationalFunction& g, const std::vector<Pair>& pairs) {
  RationalFunction out;
  for (const auto& [q, p] : pairs)
    out += f.derivative(p) * g.derivative(q) - f.derivative(q) * g.derivative(p);
  return out;
}

namespace {

// First nonzero commutator component, after applying `post`.
std::string commutator_witness(const FlowSystem& sys, const Bindings& post) {
  const std::vector<Var> vars = sys.phase_vars();
  for (std::size_t a = 0; a < sys.times.size(); ++a)
    for (std::size_t b = a + 1; b < sys.times.size(); ++b)
      for (std::size_t v = 0; v < vars.size(); ++v) {
        const auto& va = sys.fields[a];
        const auto& vb = sys.fields[b];
        RationalFunction res = va[v].derivative(sys.times[b]) + directional(vb, vars, va[v]) -
                               vb[v].derivative(sys.times[a]) - directional(va, vars, vb[v]);
        if (!post.empty()) res = substitute(res, post);
        if (!res.is_zero())
          return "(" + name(sys.times[a]) + "," + name(sys.times[b]) + ") d" + name(vars[v]) + ": " + res.to_string();
      }
  return {};
}

}  // namespace

CheckReport check_commuting_flows(const FlowSystem& sys) {
  return timed(sys.name + ":compatibility", [&](CheckReport& r) {
    const std::string w = commutator_witness(sys, {});
    if (!w.empty()) fail(r, w);
  });
}

CheckReport check_commuting_flows(const HamiltonianSystem& sys) {
  return timed(sys.name + ":compatibility", [&](CheckReport& r) {
    const FlowSystem f = as_flows(sys);
    const std::string w = commutator_witness(f, {});
    if (w.empty()) {
      r.detail = "unconstrained";
      return;
    }
    const Bindings elim = elimination_or_empty(sys);
    if (!elim.empty() && commutator_witness(f, elim).empty()) {
      r.detail = "with constraint " + sys.constraint->text;
      return;
    }
    fail(r, w);
  });
}

std::vector<Residual> symmetry_residuals(const HamiltonianSystem& sys, const SymmetryTransformation& g,
                                         bool use_constraint) {
  const FlowSystem f = as_flows(sys);
  return flow_residuals(f, f, g, {}, use_constraint ? elimination_or_empty(sys) : Bindings{});
}

CheckReport check_symmetry(const HamiltonianSystem& sys, const SymmetryTransformation& g, bool use_constraint) {
  return timed(g.id + (use_constraint ? ":constrained" : ":plain"), [&](CheckReport& r) {
    if (use_constraint && !sys.constraint) throw std::invalid_argument(sys.name + " has no constraint");
    const auto res = symmetry_residuals(sys, g, use_constraint);
    if (!res.empty()) fail(r, describe(res.front(), sys.times, sys.phase_vars()));
  });
}

CheckReport check_symmetry(const HamiltonianSystem& sys, const SymmetryTransformation& g) {
  CheckReport plain = check_symmetry(sys, g, false);
  plain.id = g.id;
  if (plain.passed() || !sys.constraint) {
    plain.detail = plain.passed() ? "unconstrained" : "";
    return plain;
  }
  CheckReport constrained = check_symmetry(sys, g, true);
  constrained.id = g.id;
  constrained.millis += plain.millis;
  if (constrained.passed()) {
    constrained.detail = "with constraint " + sys.constraint->text;
    return constrained;
  }
  plain.millis = constrained.millis;
  plain.detail = "fails with and without the constraint";
  return plain;
}

CheckReport check_conjugacy(const Conjugacy& c) {
  return timed(c.id, [&](CheckReport& r) {
    const HamiltonianSystem& src = registry_get(c.source);
    const HamiltonianSystem& dst = registry_get(c.target);
    auto res = flow_residuals(as_flows(src), as_flows(dst), c.map, c.source_params, {});
    if (res.empty()) {
      r.detail = "unconstrained";
      return;
    }
    if (dst.constraint) {
      auto constrained = flow_residuals(as_flows(src), as_flows(dst), c.map, c.source_params,
                                        dst.constraint->elimination());
      if (constrained.empty()) {
        r.detail = "with constraint " + dst.constraint->text;
        return;
      }
    }
    fail(r, describe(res.front(), src.times, dst.phase_vars()));
  });
}

CheckReport check_round_trip(const BirationalMap& m) {
  return timed(m.id + ":round-trip", [&](CheckReport& r) {
    if (!m.has_inverse()) throw std::invalid_argument(m.id + ": no inverse stored");
    Bindings there;
    for (std::size_t k = 0; k < m.target.size(); ++k) there.emplace_back(m.target[k], m.forward[k]);
    Bindings back;
    for (std::size_t k = 0; k < m.source.size(); ++k) back.emplace_back(m.source[k], m.inverse[k]);
    for (std::size_t k = 0; k < m.source.size(); ++k) {
      const RationalFunction d = substitute(m.inverse[k], there) - RationalFunction::variable(m.source[k]);
      if (!d.is_zero()) return fail(r, "inverse(forward) component " + name(m.source[k]) + ": " + d.to_string());
    }
    for (std::size_t k = 0; k < m.target.size(); ++k) {
      const RationalFunction d = substitute(m.forward[k], back) - RationalFunction::variable(m.target[k]);
      if (!d.is_zero()) return fail(r, "forward(inverse) component " + name(m.target[k]) + ": " + d.to_string());
    }
  });
}

std::vector<CheckReport> check_chart(const HamiltonianSystem& sys, const BirationalMap& chart) {
  std::vector<CheckReport> out;
  out.push_back(timed(chart.id + ":symplectic", [&](CheckReport& r) {
    const auto s = check_symplectic(chart, sys.pairs);
    if (!s.ok) fail(r, s.witness);
  }));
  const VarSet target = set_of(chart.target);
  std::vector<Pair> target_pairs;
  for (std::size_t k = 0; k + 1 < chart.target.size(); k += 2) target_pairs.emplace_back(chart.target[k], chart.target[k + 1]);
  for (std::size_t b = 0; b < sys.times.size(); ++b)
    out.push_back(timed(chart.id + ":" + name(sys.times[b]), [&](CheckReport& r) {
      VectorField field = pushforward_vector_field(chart, sys, b, Transport::dynamic);
      auto first_bad = [&](const VectorField& f) {
        for (std::size_t k = 0; k < f.size(); ++k)
          if (!polynomial_in(f[k], target)) return k;
        return f.size();
      };
      std::size_t bad = first_bad(field);
      const Bindings elim = elimination_or_empty(sys);
      if (bad < field.size() && !elim.empty()) {
        VectorField constrained;
        for (const auto& c : field) constrained.push_back(substitute(c, elim));
        if (first_bad(constrained) == constrained.size()) {
          field = std::move(constrained);
          bad = field.size();
          r.detail = "with constraint " + sys.constraint->text;
        }
      }
      if (bad < field.size())
        return fail(r, "d" + name(chart.target[bad]) + "/d" + name(sys.times[b]) + " = " + field[bad].to_string());
      reconstruct_hamiltonian(field, target_pairs);
    }));
  return out;
}

std::vector<CheckReport> check_holomorphy_suite(const HamiltonianSystem& sys) {
  std::vector<CheckReport> out;
  for (const auto& c : charts(sys.name)) {
    auto part = check_chart(sys, c);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<CheckReport> check_gauge(const HamiltonianSystem& sys, const BirationalMap& chart) {
  std::vector<CheckReport> out;
  if (chart.gauge.empty()) return out;
  const VarSet target = set_of(chart.target);
  for (std::size_t b = 0; b < sys.times.size(); ++b) {
    const std::string t = name(sys.times[b]);
    out.push_back(timed(chart.id + ":gauge:" + t, [&](CheckReport& r) {
      const VectorField dyn = pushforward_vector_field(chart, sys, b, Transport::dynamic);
      const VectorField gauged = pushforward_vector_field(chart, sys, b, Transport::static_gauged);
      for (std::size_t k = 0; k < dyn.size(); ++k) {
        const RationalFunction d = gauged[k] - dyn[k];
        if (!d.is_zero()) return fail(r, "d" + name(chart.target[k]) + "/d" + t + " differs by " + d.to_string());
      }
    }));
    out.push_back(timed(chart.id + ":gauge-needed:" + t, [&](CheckReport& r) {
      const VectorField plain = pushforward_vector_field(chart, sys, b, Transport::static_plain);
      for (const auto& c : plain)
        if (!polynomial_in(c, target)) return;
      fail(r, "static field without the gauge term is polynomial");
    }));
  }
  return out;
}

CheckReport check_degeneration(const DegenerationScheme& d) {
  return timed(d.id, [&](CheckReport& r) {
    const FlowSystem lim = degeneration_limit(d);
    const HamiltonianSystem& target = registry_get(d.target);
    // First mismatch of the limit against the target field, optionally modulo
    // the target constraint.
    auto mismatch = [&](const Bindings& post) -> std::string {
      for (std::size_t a = 0; a < target.times.size(); ++a) {
        const VectorField want = vector_field(target, a);
        for (std::size_t i = 0; i < want.size(); ++i) {
          RationalFunction diff = lim.fields[a][i] - want[i];
          if (!post.empty()) diff = substitute(diff, post);
          if (!diff.is_zero())
            return "d" + name(target.phase_vars()[i]) + "/d" + name(target.times[a]) + " limit differs by " +
                   diff.to_string();
        }
      }
      return {};
    };
    const std::string plain = mismatch({});
    if (plain.empty()) {
      r.detail = "unconstrained";
      return;
    }
    const Bindings elim = elimination_or_empty(target);
    if (!elim.empty() && mismatch(elim).empty()) {
      r.detail = "with constraint " + target.constraint->text;
      return;
    }
    fail(r, plain);
  });
}

CheckReport check_first_integrals(const HamiltonianSystem& sys, const RationalFunction& f) {
  for (const auto& h : sys.hamiltonians)
    for (Var t : sys.times)
      if (h.depends_on(t)) throw std::invalid_argument(sys.name + " is not autonomous");
  return timed(sys.name + ":integral", [&](CheckReport& r) {
    const std::vector<Var> vars = sys.phase_vars();
    for (std::size_t a = 0; a < sys.times.size(); ++a) {
      const RationalFunction d = directional(vector_field(sys, a), vars, f);
      if (!d.is_zero()) return fail(r, "d/d" + name(sys.times[a]) + " = " + d.to_string());
    }
  });
}

FlowSystem mkdv_target_system() {
  FlowSystem out;
  out.name = "mkdv";
  out.pairs = {{Var::named("x"), Var::named("y")}, {Var::named("z"), Var::named("w")}};
  out.times = {Var::named("t"), Var::named("S")};
  auto parse_all = [](std::initializer_list<const char*> texts) {
    VectorField v;
    for (const char* t : texts) v.push_back(parse(t));
    return v;
  };
  out.fields.push_back(parse_all({"y", "z", "w", "12*x^3*y+12*x*y^2+6*x^2*z-2*x*w"}));
  out.fields.push_back(parse_all({"w-6*x^2*y", "-2*x*(w-6*x^2*y)", "2*(2*x^2-y)*(w-6*x^2*y)",
                                  "-2*(4*x^3-6*x*y+z)*(w-6*x^2*y)"}));
  return out;
}

std::vector<CheckReport> check_mkdv_reduction() {
  std::vector<CheckReport> out;
  const HamiltonianSystem& sys = registry_get("autoG14");
  const FlowSystem target = mkdv_target_system();
  const BirationalMap& m = transform("autoG14:mkdv");
  out.push_back(timed("mkdv:map", [&](CheckReport& r) {
    auto res = flow_residuals(as_flows(sys), target, m, {}, {});
    if (res.empty()) {
      r.detail = "unconstrained";
      return;
    }
    if (flow_residuals(as_flows(sys), target, m, {}, sys.constraint->elimination()).empty()) {
      r.detail = "with constraint " + sys.constraint->text;
      return;
    }
    fail(r, describe(res.front(), sys.times, target.phase_vars()));
  }));

  // u = x: each t-derivative is the next coordinate, then the fourth-order equation.
  out.push_back(timed("mkdv:derivatives", [&](CheckReport& r) {
    const auto vars = target.phase_vars();
    const RationalFunction u = parse("x");
    const RationalFunction ut = directional(target.fields[0], vars, u);
    const RationalFunction utt = directional(target.fields[0], vars, ut);
    const RationalFunction uttt = directional(target.fields[0], vars, utt);
    const RationalFunction utttt = directional(target.fields[0], vars, uttt);
    if (ut != parse("y")) return fail(r, "u_t = " + ut.to_string());
    if (utt != parse("z")) return fail(r, "u_tt = " + utt.to_string());
    if (uttt != parse("w")) return fail(r, "u_ttt = " + uttt.to_string());
    const RationalFunction rhs = parse("12*x^3*y + 12*x*y^2 + 6*x^2*z - 2*x*w");
    if (utttt != rhs) fail(r, "u_tttt residual " + (utttt - rhs).to_string());
  }));

  out.push_back(timed("mkdv:mkdv-and-chazy", [&](CheckReport& r) {
    const auto vars = target.phase_vars();
    const RationalFunction uS = directional(target.fields[1], vars, parse("x"));
    const RationalFunction mkdv = uS - (parse("w") - parse("6*x^2*y"));
    if (!mkdv.is_zero()) return fail(r, "u_S - u_ttt + 6u^2u_t = " + mkdv.to_string());
    // Differentiating the integrated equation back along t.
    const RationalFunction integral = parse("w - 3*x^4 - 6*x^2*y - y^2 + 2*x*z");
    const RationalFunction back = directional(target.fields[0], vars, integral);
    if (!back.is_zero()) fail(r, "d/dt of the integrated equation = " + back.to_string());
  }));
  return out;
}

std::optional<Bindings> infer_parameter_map(const HamiltonianSystem& sys, const SymmetryTransformation& g) {
  static const char* const kUnknowns[] = {"A0", "A1", "A2", "A3", "A4", "A5"};
  // Parameters the flows actually depend on.
  const FlowSystem f = as_flows(sys);
  std::vector<Var> used;
  for (Var a : sys.params) {
    bool occurs = false;
    for (const auto& field : f.fields)
      for (const auto& c : field) occurs = occurs || c.depends_on(a);
    if (occurs) used.push_back(a);
  }
  if (used.size() > std::size(kUnknowns)) throw std::invalid_argument("too many parameters to infer");
  const std::size_t n = used.size();

  SymmetryTransformation trial = g;
  trial.params.clear();
  std::vector<Var> unknowns;
  for (std::size_t k = 0; k < n; ++k) {
    unknowns.push_back(Var::named(kUnknowns[k]));
    trial.params.emplace_back(used[k], RationalFunction::variable(unknowns[k]));
  }

  VarSet structural = set_of(sys.phase_vars()) | set_of(sys.times);
  // Echelon rows over the field of rational functions in the parameters.
  std::vector<std::vector<RationalFunction>> basis;
  std::vector<std::size_t> pivots;
  Bindings zero;
  for (Var u : unknowns) zero.emplace_back(u, RationalFunction());
  for (const auto& res : flow_residuals(f, f, trial, {}, {})) {
    for (const auto& [mono, coef] : res.value.num().split_wrt(structural)) {
      std::vector<RationalFunction> row(n + 1);
      for (std::size_t k = 0; k < n; ++k) row[k] = coef.derivative(unknowns[k]);
      row[n] = substitute(coef, zero);
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (row[pivots[b]].is_zero()) continue;
        const RationalFunction factor = row[pivots[b]];
        for (std::size_t k = 0; k <= n; ++k) row[k] -= factor * basis[b][k];
      }
      std::size_t p = 0;
      while (p < n && row[p].is_zero()) ++p;
      if (p == n) {
        if (!row[n].is_zero()) return std::nullopt;
        continue;
      }
      const RationalFunction inv = row[p].inverse();
      for (auto& e : row) e *= inv;
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (basis[b][p].is_zero()) continue;
        const RationalFunction factor = basis[b][p];
        for (std::size_t k = 0; k <= n; ++k) basis[b][k] -= factor * row[k];
      }
      basis.push_back(std::move(row));
      pivots.push_back(p);
    }
    if (basis.size() == n) break;
  }
  if (basis.size() != n) return std::nullopt;

  Bindings out;
  for (Var a : sys.params) {
    const auto it = std::find(used.begin(), used.end(), a);
    if (it == used.end()) continue;
    const std::size_t k = static_cast<std::size_t>(it - used.begin());
    for (std::size_t b = 0; b < n; ++b)
      if (pivots[b] == k) out.emplace_back(a, -basis[b][n]);
  }
  // A parameter absent from the flows follows from preserving the constraint.
  for (Var a : sys.params) {
    if (std::find(used.begin(), used.end(), a) != used.end()) continue;
    if (!sys.constraint) return std::nullopt;
    const Var slot = Var::named(kUnknowns[std::size(kUnknowns) - 1]);
    Bindings images = out;
    images.emplace_back(a, RationalFunction::variable(slot));
    const RationalFunction rel = substitute(RationalFunction(sys.constraint->relation), images);
    const RationalFunction slope = rel.derivative(slot);
    if (slope.is_zero() || !slope.derivative(slot).is_zero()) return std::nullopt;
    RationalFunction image = -substitute(rel, {{slot, RationalFunction()}}) / slope;
    const RationalFunction self = RationalFunction::variable(a);
    if (substitute(image - self, sys.constraint->elimination()).is_zero()) image = self;
    out.emplace_back(a, image);
  }
  SymmetryTransformation check = g;
  check.params = out;
  if (!symmetry_residuals(sys, check, false).empty()) return std::nullopt;
  return out;
}

CheckReport check_relation(const std::string& id, const HamiltonianSystem& sys,
                           const std::vector<const BirationalMap*>& word) {
  return timed(id, [&](CheckReport& r) {
    BirationalMap acc = identity_map(sys);
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = compose(**it, acc);
    if (same_action(acc, identity_map(sys))) return;
    for (std::size_t k = 0; k < acc.forward.size(); ++k)
      if (acc.forward[k] != RationalFunction::variable(acc.target[k]))
        return fail(r, name(acc.target[k]) + " -> " + acc.forward[k].to_string());
    for (const auto& [p, e] : acc.params)
      if (e != RationalFunction::variable(p)) return fail(r, name(p) + " -> " + e.to_string());
    for (std::size_t k = 0; k < acc.time_forward.size(); ++k)
      if (acc.time_forward[k] != RationalFunction::variable(acc.target_times[k]))
        return fail(r, name(acc.target_times[k]) + " -> " + acc.time_forward[k].to_string());
    fail(r, "composite differs from the identity");
  });
}

BirationalMap composed_pi3() {
  BirationalMap m = compose(transform("dVV:g4"),
                            compose(transform("dVV:g3"), compose(transform("dVV:g2"), transform("dVV:g1"))));
  m.id = "dVV:g4*g3*g2*g1";
  const auto params = infer_parameter_map(registry_get("dVV"), m);
  if (!params) throw std::domain_error("no affine parameter map makes the composite a symmetry of dVV");
  m.params.clear();
  for (const auto& [a, e] : *params)
    if (e != RationalFunction::variable(a)) m.params.emplace_back(a, e);
  return m;
}

CheckReport check_pi3_composition() {
  return timed("dVV:pi3=g4*g3*g2*g1", [&](CheckReport& r) {
    const HamiltonianSystem& sys = registry_get("dVV");
    const BirationalMap composite = composed_pi3();
    const BirationalMap& printed = transform("dVV:pi3");
    for (std::size_t k = 0; k < printed.forward.size(); ++k)
      if (composite.forward[k] != printed.forward[k])
        return fail(r, name(printed.target[k]) + ": " + composite.forward[k].to_string() + " vs " +
                           printed.forward[k].to_string());
    for (Var t : sys.times)
      if (time_image(composite, t) != time_image(printed, t))
        return fail(r, name(t) + ": " + time_image(composite, t).to_string() + " vs " +
                           time_image(printed, t).to_string());
    const Bindings elim = elimination_or_empty(sys);
    bool exact = true;
    for (Var a : sys.params) {
      const RationalFunction d = composite.param_image(a) - printed.param_image(a);
      if (d.is_zero()) continue;
      exact = false;
      if (elim.empty() || !substitute(d, elim).is_zero())
        return fail(r, name(a) + ": " + composite.param_image(a).to_string() + " vs " +
                           printed.param_image(a).to_string());
    }
    r.detail = exact ? "exact" : "parameters agree with constraint " + sys.constraint->text;
  });
}

}  // namespace garnier

namespace garnier {

CheckReport check_displayed_field(const std::string& id, const HamiltonianSystem& sys, const FlowSystem& shown) {
  return timed(id, [&](CheckReport& r) {
    if (shown.times.size() != sys.times.size()) throw std::invalid_argument("time count differs");
    auto witness = [&](const Bindings& post) -> std::string {
      for (std::size_t a = 0; a < sys.times.size(); ++a) {
        const VectorField want = vector_field(sys, a);
        for (std::size_t i = 0; i < want.size(); ++i) {
          RationalFunction d = shown.fields[a][i] - want[i];
          if (!post.empty()) d = substitute(d, post);
          if (!d.is_zero())
            return "d" + name(sys.phase_vars()[i]) + "/d" + name(sys.times[a]) + " differs by " + d.to_string();
        }
      }
      return {};
    };
    const std::string plain = witness({});
    if (plain.empty()) {
      r.detail = "unconstrained";
      return;
    }
    const Bindings elim = elimination_or_empty(sys);
    if (!elim.empty() && witness(elim).empty()) {
      r.detail = "with constraint " + sys.constraint->text;
      return;
    }
    fail(r, plain);
  });
}

FlowSystem kimura_displayed_field(bool literal) {
  const std::string coupling = literal ? "(X-Z)*(X*Y-Y*Z+a3)" : "(x-z)*(x*y-y*z+a3)";
  FlowSystem f;
  f.name = literal ? "kimura-display-literal" : "kimura-display";
  f.pairs = {{Var::named("x"), Var::named("y")}, {Var::named("z"), Var::named("w")}};
  f.times = {Var::named("T"), Var::named("S")};
  f.fields.push_back({parse("-x^2+y+w-T/2"), parse("2*x*y+a3"), parse("-z^2+w+y-S/2-T/2"), parse("2*z*w+a1")});
  f.fields.push_back({parse("-(x-z)*(x*w-z*w-a1)/S+w/2"), parse("(2*x*y*w-2*y*z*w-a1*y+a3*w)/S"),
                      parse("-z^2+w-S/2-T/2+y/2-" + coupling + "/S"),
                      parse("2*z*w+a1-(2*x*y*w-2*y*z*w-a1*y+a3*w)/S")});
  return f;
}

std::vector<RelationReport> check_autog14_relations() {
  const HamiltonianSystem& sys = registry_get("autoG14");
  const BirationalMap* s0 = &transform("autoG14:s0");
  const BirationalMap* s1 = &transform("autoG14:s1");
  const BirationalMap* s2 = &transform("autoG14:s2");
  const BirationalMap* pi = &transform("autoG14:pi");
  auto power = [](std::vector<const BirationalMap*> word, unsigned n) {
    std::vector<const BirationalMap*> out;
    for (unsigned k = 0; k < n; ++k) out.insert(out.end(), word.begin(), word.end());
    return out;
  };
  std::vector<RelationReport> out;
  out.push_back({check_relation("autoG14:s0^2", sys, {s0, s0}), true});
  out.push_back({check_relation("autoG14:s1^2", sys, {s1, s1}), true});
  out.push_back({check_relation("autoG14:s2^2", sys, {s2, s2}), true});
  out.push_back({check_relation("autoG14:pi^2", sys, {pi, pi}), true});
  // pi s0 pi s2 = id is pi s0 pi = s2 since s2 is an involution.
  out.push_back({check_relation("autoG14:pi.s0.pi=s2", sys, {pi, s0, pi, s2}), true});
  out.push_back({check_relation("autoG14:(s0.s2)^2", sys, power({s0, s2}, 2)), false});
  out.push_back({check_relation("autoG14:(s0.s1)^4", sys, power({s0, s1}, 4)), false});
  out.push_back({check_relation("autoG14:(s1.s2)^4", sys, power({s1, s2}, 4)), false});
  return out;
}

CheckReport check_pi_order(const HamiltonianSystem& sys, unsigned order) {
  BirationalMap pi;
  pi.id = sys.name + ":pi";
  pi.source = pi.target = sys.phase_vars();
  auto image = [&](Var v) {
    for (const auto& [k, e] : sys.pi)
      if (k == v) return e;
    return RationalFunction::variable(v);
  };
  for (Var v : pi.source) pi.forward.push_back(image(v));
  pi.source_times = pi.target_times = sys.times;
  for (Var t : sys.times) pi.time_forward.push_back(image(t));
  for (Var a : sys.params)
    if (image(a) != RationalFunction::variable(a)) pi.params.emplace_back(a, image(a));
  std::vector<const BirationalMap*> word(order, &pi);
  CheckReport r = check_relation(sys.name + ":pi^" + std::to_string(order), sys, word);
  if (sys.pi.empty()) {
    r.verdict = Verdict::error;
    r.witness = sys.name + " has no pi";
  }
  return r;
}

const std::vector<Mutation>& mutations() {
  static const std::vector<Mutation> list{
      {"autoG14:H1:t0", "autoG14", 0, 0, 2},   {"autoG14:H2:t1", "autoG14", 1, 1, 2},
      {"autoG14:H1:t3", "autoG14", 0, 3, -1},  {"dVV:H1:t0", "dVV", 0, 0, 2},
      {"dVV:H1:t4", "dVV", 0, 4, 3},           {"SdeG3:H1:t2", "SdeG3", 0, 2, 2},
      {"SdeG4:H1:t1", "SdeG4", 0, 1, 2},       {"SdeGa:H1:t0", "SdeGa", 0, 0, -1},
      {"uraS:H1:t5", "uraS", 0, 5, 2},         {"G11111:H2:t3", "G11111", 1, 3, 2},
      {"dV:H1:t2", "dV", 0, 2, 2},             {"SdeGaK:H1:t1", "SdeGaK", 0, 1, 2},
  };
  return list;
}

HamiltonianSystem mutate(const Mutation& m) {
  HamiltonianSystem sys = registry_get(m.system);
  if (m.hamiltonian >= sys.hamiltonians.size()) throw std::out_of_range("no Hamiltonian " + std::to_string(m.hamiltonian));
  const RationalFunction& h = sys.hamiltonians[m.hamiltonian];
  std::vector<Term> terms(h.num().terms().begin(), h.num().terms().end());
  // Only terms that reach the vector field count.
  std::size_t seen = 0;
  for (auto& t : terms) {
    bool moves = false;
    for (Var v : sys.phase_vars()) moves = moves || t.mono[v] > 0;
    if (!moves) continue;
    if (seen++ == m.term) {
      t.coef *= FieldElement(m.factor);
      sys.hamiltonians[m.hamiltonian] = RationalFunction::fraction(Polynomial::from_terms(std::move(terms)), h.den());
      return sys;
    }
  }
  throw std::out_of_range("term index past the phase-dependent terms of " + m.id);
}

CheckReport check_mutation(const Mutation& m) {
  return timed("mutation:" + m.id, [&](CheckReport& r) {
    const HamiltonianSystem sys = mutate(m);
    auto caught = [&](const CheckReport& c, const char* suite) {
      if (c.passed()) return false;
      r.detail = std::string(suite) + " " + c.id + ": " + c.witness;
      return true;
    };
    if (sys.times.size() > 1 && caught(check_commuting_flows(sys), "compatibility")) return;
    for (const auto& c : charts(sys.name))
      for (const auto& rep : check_chart(sys, c))
        if (caught(rep, "holomorphy")) return;
    // Only symmetries that hold for the registered system can witness.
    const HamiltonianSystem& original = registry_get(m.system);
    for (const auto& g : symmetries(sys.name))
      if (check_symmetry(original, g).passed() && caught(check_symmetry(sys, g), "symmetry")) return;
    fail(r, "no suite detects the mutation");
  });
}

}  // namespace garnier
