#include "garnier/transforms.hpp"

#include <algorithm>
#include <set>

namespace garnier {

namespace {

std::vector<Var> flatten(const std::vector<Pair>& pairs) {
  std::vector<Var> out;
  for (const auto& [q, p] : pairs) {
    out.push_back(q);
    out.push_back(p);
  }
  return out;
}

VarSet as_set(const std::vector<Var>& vars) {
  VarSet s;
  for (Var v : vars) s.set(v.id());
  return s;
}

Bindings zip(const std::vector<Var>& vars, const std::vector<RationalFunction>& values) {
  Bindings out;
  for (std::size_t k = 0; k < vars.size(); ++k) out.emplace_back(vars[k], values[k]);
  return out;
}

// Effective time images of a map: identity when it leaves times alone.
RationalFunction time_image(const BirationalMap& m, Var t) {
  for (std::size_t k = 0; k < m.time_forward.size(); ++k)
    if (m.target_times[k] == t) return m.time_forward[k];
  return RationalFunction::variable(t);
}

}  // namespace

std::vector<Var> FlowSystem::phase_vars() const { return flatten(pairs); }

FlowSystem flows(const HamiltonianSystem& sys) {
  FlowSystem out{sys.name, sys.pairs, sys.times, {}};
  for (std::size_t b = 0; b < sys.times.size(); ++b) out.fields.push_back(vector_field(sys, b));
  return out;
}

bool BirationalMap::moves_times() const {
  for (std::size_t k = 0; k < time_forward.size(); ++k)
    if (time_forward[k] != RationalFunction::variable(source_times[k])) return true;
  return false;
}

Bindings BirationalMap::pullback() const {
  Bindings b = zip(target, forward);
  for (std::size_t k = 0; k < time_forward.size(); ++k) b.emplace_back(target_times[k], time_forward[k]);
  b.insert(b.end(), params.begin(), params.end());
  return b;
}

RationalFunction BirationalMap::param_image(Var param) const {
  for (const auto& [v, e] : params)
    if (v == param) return e;
  return RationalFunction::variable(param);
}

RationalFunction determinant(std::vector<std::vector<RationalFunction>> m) {
  const std::size_t n = m.size();
  RationalFunction det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c].is_zero()) ++pivot;
    if (pivot == n) return {};
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    const RationalFunction inv = m[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      const RationalFunction f = m[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

SymplecticResult check_symplectic(const BirationalMap& m, const std::vector<Pair>& pairs) {
  const std::vector<Var> vars = flatten(pairs);
  const std::size_t n = vars.size();
  if (m.forward.size() != n) throw std::invalid_argument(m.id + ": component count does not match the pairs");
  std::vector<std::vector<RationalFunction>> jac(n, std::vector<RationalFunction>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) jac[i][j] = m.forward[i].derivative(vars[j]);

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      RationalFunction e;
      for (std::size_t k = 0; k + 1 < n; k += 2)
        e += jac[k][a] * jac[k + 1][b] - jac[k + 1][a] * jac[k][b];
      const RationalFunction expected((a % 2 == 0 && b == a + 1) ? 1 : 0);
      if (e != expected) {
        if (determinant(jac).is_zero()) throw std::domain_error(m.id + ": Jacobian determinant vanishes");
        return {false, "J^T Omega J entry (" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                           ") = " + e.to_string() + ", expected " + expected.to_string()};
      }
    }
  return {true, {}};
}

VectorField pushforward_vector_field(const BirationalMap& m, const HamiltonianSystem& sys, std::size_t time_index,
                                     Transport mode) {
  if (!m.has_inverse()) throw std::invalid_argument(m.id + ": no inverse stored");
  const std::vector<Var> vars = sys.phase_vars();
  if (m.source != vars) throw std::invalid_argument(m.id + ": source variables differ from " + sys.name);

  VectorField field;
  if (mode == Transport::static_gauged && !m.gauge.empty()) {
    HamiltonianSystem shifted = sys;
    shifted.hamiltonians[time_index] -= m.gauge.at(time_index);
    field = vector_field(shifted, time_index);
  } else {
    field = vector_field(sys, time_index);
  }
  const Var t = sys.times[time_index];
  const Bindings back = zip(m.source, m.inverse);
  VectorField out;
  for (const auto& f : m.forward) {
    RationalFunction c = mode == Transport::dynamic ? f.derivative(t) : RationalFunction();
    for (std::size_t j = 0; j < vars.size(); ++j)
      if (!field[j].is_zero() && f.depends_on(vars[j])) c += f.derivative(vars[j]) * field[j];
    out.push_back(substitute(c, back));
  }
  return out;
}

RationalFunction reconstruct_hamiltonian(const VectorField& field, const std::vector<Pair>& pairs) {
  const std::vector<Var> vars = flatten(pairs);
  if (field.size() != vars.size()) throw std::invalid_argument("field size does not match the pairs");
  const VarSet phase = as_set(vars);
  // dH = sum omega_k dz_k with omega_q = -pdot and omega_p = qdot.
  std::vector<RationalFunction> omega;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if ((field[k].den().support() & phase).any())
      throw std::invalid_argument("component " + std::to_string(k + 1) + " is not polynomial in the phase variables");
    omega.push_back(k % 2 == 0 ? -field[k + 1] : field[k - 1]);
  }
  for (std::size_t a = 0; a < vars.size(); ++a)
    for (std::size_t b = a + 1; b < vars.size(); ++b) {
      const RationalFunction r = omega[a].derivative(vars[b]) - omega[b].derivative(vars[a]);
      if (!r.is_zero())
        throw NotHamiltonian("field is not closed in (" + std::string(vars[a].name()) + "," +
                             std::string(vars[b].name()) + "): " + r.to_string());
    }
  // Straight line from the origin: a monomial of degree d in omega_k
  // contributes z_k * m / (d + 1).
  RationalFunction h;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    Polynomial acc;
    for (const auto& [mono, coef] : omega[k].num().split_wrt(phase)) {
      Monomial m = mono;
      m.set(vars[k], m[vars[k]] + 1);
      acc += coef.times_monomial(m, FieldElement(mpq_class(1, mono.degree() + 1)));
    }
    h += RationalFunction::fraction(std::move(acc), omega[k].den());
  }
  return h;
}

BirationalMap identity_map(const HamiltonianSystem& sys) {
  BirationalMap m;
  m.id = sys.name + ":id";
  m.source = m.target = sys.phase_vars();
  for (Var v : m.source) {
    m.forward.push_back(RationalFunction::variable(v));
    m.inverse.push_back(RationalFunction::variable(v));
  }
  return m;
}

BirationalMap compose(const BirationalMap& outer, const BirationalMap& inner) {
  if (inner.target != outer.source)
    throw std::invalid_argument("cannot compose " + outer.id + " after " + inner.id + ": variable lists differ");
  BirationalMap out;
  out.id = outer.id + "*" + inner.id;
  out.source = inner.source;
  out.target = outer.target;
  const Bindings pull = inner.pullback();
  for (const auto& f : outer.forward) out.forward.push_back(substitute(f, pull));

  // Times: outer's images read in inner's target times.
  if (!outer.time_forward.empty() || !inner.time_forward.empty()) {
    std::vector<Var> times = !outer.time_forward.empty() ? outer.target_times : inner.target_times;
    out.source_times = !inner.time_forward.empty() ? inner.source_times : outer.source_times;
    out.target_times = times;
    Bindings tb;
    for (std::size_t k = 0; k < inner.time_forward.size(); ++k) tb.emplace_back(inner.target_times[k], inner.time_forward[k]);
    for (std::size_t k = 0; k < times.size(); ++k) {
      const RationalFunction img = outer.time_forward.empty() ? time_image(inner, times[k]) : outer.time_forward[k];
      out.time_forward.push_back(outer.time_forward.empty() ? img : substitute(img, tb));
    }
  }

  for (const auto& [p, e] : outer.params) out.params.emplace_back(p, substitute(e, inner.params));
  for (const auto& [p, e] : inner.params) {
    const bool listed = std::any_of(outer.params.begin(), outer.params.end(), [&](const auto& b) { return b.first == p; });
    if (!listed) out.params.emplace_back(p, e);
  }

  if (outer.has_inverse() && inner.has_inverse() && outer.params.empty() && inner.params.empty() &&
      outer.time_forward.empty() && inner.time_forward.empty()) {
    const Bindings outer_back = zip(outer.source, outer.inverse);
    for (const auto& g : inner.inverse) out.inverse.push_back(substitute(g, outer_back));
  }
  return out;
}

bool same_action(const BirationalMap& a, const BirationalMap& b) {
  if (a.source != b.source || a.target != b.target || a.forward != b.forward) return false;
  std::set<Var> times(a.target_times.begin(), a.target_times.end());
  times.insert(b.target_times.begin(), b.target_times.end());
  for (Var t : times)
    if (time_image(a, t) != time_image(b, t)) return false;
  std::set<Var> params;
  for (const auto& [p, e] : a.params) params.insert(p);
  for (const auto& [p, e] : b.params) params.insert(p);
  for (Var p : params)
    if (a.param_image(p) != b.param_image(p)) return false;
  return true;
}

FlowSystem apply_degeneration(const DegenerationScheme& d) {
  const HamiltonianSystem& src = registry_get(d.source);
  const BirationalMap& m = d.map;
  if (!m.has_inverse()) throw std::invalid_argument(d.id + ": no inverse");
  const std::vector<Var> vars = src.phase_vars();

  // Old times and parameters in the new ones; the inverse may mention both.
  Bindings late = zip(m.source_times, m.time_inverse);
  late.insert(late.end(), d.old_params.begin(), d.old_params.end());
  Bindings all;
  for (std::size_t j = 0; j < vars.size(); ++j) all.emplace_back(vars[j], substitute(m.inverse[j], late));
  all.insert(all.end(), late.begin(), late.end());

  // d(new)/d(old time b), rewritten in new quantities.
  std::vector<VectorField> per_old;
  for (std::size_t b = 0; b < src.times.size(); ++b) {
    const VectorField field = vector_field(src, b);
    VectorField comp;
    for (const auto& f : m.forward) {
      RationalFunction c = f.derivative(src.times[b]);
      for (std::size_t j = 0; j < vars.size(); ++j)
        if (!field[j].is_zero() && f.depends_on(vars[j])) c += f.derivative(vars[j]) * field[j];
      comp.push_back(substitute(substitute(c, d.old_params), all));
    }
    per_old.push_back(std::move(comp));
  }

  FlowSystem out;
  out.name = d.id;
  for (std::size_t k = 0; k + 1 < m.target.size(); k += 2) out.pairs.emplace_back(m.target[k], m.target[k + 1]);
  out.times = m.target_times;
  for (Var big_t : m.target_times) {
    VectorField field(m.target.size());
    for (std::size_t b = 0; b < src.times.size(); ++b) {
      const RationalFunction factor = m.time_inverse[b].derivative(big_t);
      if (factor.is_zero()) continue;
      for (std::size_t i = 0; i < field.size(); ++i) field[i] += factor * per_old[b][i];
    }
    out.fields.push_back(std::move(field));
  }
  return out;
}

FlowSystem degeneration_limit(const DegenerationScheme& d) {
  const FlowSystem family = apply_degeneration(d);
  const HamiltonianSystem& target = registry_get(d.target);
  FlowSystem out{d.target, target.pairs, target.times, {}};
  for (const auto& field : family.fields) {
    VectorField lim;
    for (const auto& c : field) lim.push_back(substitute(limit_epsilon_zero(c, d.eps), d.rename));
    out.fields.push_back(std::move(lim));
  }
  return out;
}

}  // namespace garnier
