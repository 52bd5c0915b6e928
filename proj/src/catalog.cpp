#include "garnier/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace garnier {

namespace {

RationalFunction f(std::string_view text) { return parse(text); }

Bindings bind(std::initializer_list<std::pair<const char*, const char*>> items) {
  Bindings out;
  for (const auto& [name, expr] : items) out.emplace_back(Var::named(name), parse(expr));
  return out;
}

std::vector<Var> vars(std::initializer_list<const char*> names) {
  std::vector<Var> out;
  for (const char* n : names) out.push_back(Var::named(n));
  return out;
}

std::vector<Pair> pairs(std::initializer_list<std::pair<const char*, const char*>> names) {
  std::vector<Pair> out;
  for (const auto& [q, p] : names) out.emplace_back(Var::named(q), Var::named(p));
  return out;
}

// Instantiates a template written in the placeholder variables `names` and
// A0, A1, ... for the parameters.
RationalFunction instantiate(std::string_view text, std::initializer_list<const char*> names,
                             const std::vector<Var>& slots, const std::vector<RationalFunction>& params) {
  static const char* const kParams[] = {"A0", "A1", "A2", "A3", "A4"};
  Bindings b;
  auto name = names.begin();
  for (std::size_t k = 0; k < slots.size(); ++k, ++name)
    b.emplace_back(Var::named(*name), RationalFunction::variable(slots[k]));
  for (std::size_t k = 0; k < params.size(); ++k) b.emplace_back(Var::named(kParams[k]), params[k]);
  return substitute(parse(text), b);
}

struct PainleveTemplate {
  std::size_t arity;
  const char* text;
};

PainleveTemplate painleve_template(PainleveKind kind) {
  switch (kind) {
    case PainleveKind::VI:
      return {5,
              "(y^2*(x-t)*(x-1)*x - ((A0-1)*(x-1)*x + A3*(x-t)*x + A4*(x-t)*(x-1))*y"
              " + A2*(A1+A2)*(x-t))/(t*(t-1))"};
    case PainleveKind::V:
      return {3, "(x*(x-1)*y*(y+t) + A1*t*x - A2*x*y - A0*y*(x-1))/t"};
    case PainleveKind::IV:
      return {2, "-x^2*y + 2*x*y^2 - 2*t*x*y - 2*A0*y - A1*x"};
    case PainleveKind::III:
      return {2, "(x^2*y*(y-1) + x*((1-2*A1)*y - A0) + t*y)/t"};
    case PainleveKind::II:
      return {1, "y^2/2 - (x^2 + t/2)*y - A0*x"};
  }
  throw std::invalid_argument("unknown Painleve kind");
}

// Slots: x=ql, y=pl, z=qm, w=pm, t=tl, s=tm, A0=alpha, A1=beta.
const std::map<std::string, std::string, std::less<>>& coupling_templates() {
  static const std::map<std::string, std::string, std::less<>> table{
      {"SdeGH-3v",
       "A1*x*y/(t-s) + (A0*(s-1)*z*w + 2*(s-1)*x*y*z*w)/((t-1)*(t-s)) + (t*y + (x*y+A0)*x)*z*w/(t*(t-1))"
       " - (t*(z*w+A1)*y*z + s*(x*y+A0)*x*w)/(t*(t-s))"},
      {"deGHS",
       "A1*s*x*y/(t*(t-s)) + A0*z*w/(t-s) - (t*x^2*y*w + t*y*z*w + A0*t*x*w + s*y*z^2*w"
       " - s*y*z*w + A1*s*y*z - 2*t*x*y*z*w)/(t*(t-s))"},
      {"SdeGH3",
       "A1*x*y/(t-s) + A0*z*w/(t-s) - (x^2*y*w + 2*s*y*z*w - 2*t*y*z*w - 2*x*y*z*w"
       " + y*z^2*w + A1*y*z + A0*x*w)/(t-s)"},
      {"SdeGaH-3v",
       "A1*s*x*y/(t*(t-s)) + A0*z*w/(t-s) - (t*y*z^2*w + s*x^2*y*w - 2*t*x*y*z*w"
       " + A1*t*y*z + A0*s*x*w)/(t*(t-s))"},
      {"SdeGaK",
       "A1*x*y/(t-s) - A1*y*z/(t-s) - A0*x*w/(t-s) + A0*z*w/(t-s)"
       " - (2*(x-z)^2 - t + s)*y*w/(2*(t-s))"},
  };
  return table;
}

RationalFunction H(PainleveKind kind, std::initializer_list<const char*> params) {
  std::vector<RationalFunction> ps;
  for (const char* p : params) ps.push_back(parse(p));
  return painleve_hamiltonian(kind, Var::named("x"), Var::named("y"), Var::named("t"), ps);
}

RationalFunction R(const char* family, const char* ql, const char* pl, const char* qm, const char* pm,
                   const char* tl, const char* tm, const char* alpha, const char* beta) {
  return coupling_R(family, {Var::named(ql), Var::named(pl), Var::named(qm), Var::named(pm), Var::named(tl),
                             Var::named(tm), parse(alpha), parse(beta)});
}

Constraint constraint(const char* lhs, const char* rhs, const char* last) {
  const RationalFunction rel = parse(lhs) - parse(rhs);
  return {rel.num(), Var::named(last), std::string(lhs) + " = " + rhs};
}

// Fills H2 (and H3) from H1 and pi.
void symmetric(HamiltonianSystem& sys) {
  while (sys.hamiltonians.size() < sys.times.size())
    sys.hamiltonians.push_back(substitute(sys.hamiltonians.back(), sys.pi));
}

std::vector<HamiltonianSystem> build() {
  std::vector<HamiltonianSystem> out;
  const auto xyzw = pairs({{"x", "y"}, {"z", "w"}});
  const auto xyzwqp = pairs({{"x", "y"}, {"z", "w"}, {"q", "p"}});
  const auto ts = vars({"t", "s"});
  const auto tsu = vars({"t", "s", "u"});
  const auto a16 = vars({"a1", "a2", "a3", "a4", "a5", "a6"});

  {
    HamiltonianSystem s{"G11111", xyzw, ts, {}, a16, {}, 5, {}};
    s.hamiltonians.push_back(
        H(PainleveKind::VI, {"1-2*a1-a2-a3-a5", "a2", "a1", "a5", "a3"}) - f("a4*s*x*y/(t*(t-s))") -
        f("a3*(s-1)*z*w/((t-1)*(t-s))") + f("2*(s-1)*x*y*z*w/((t-1)*(t-s))") -
        f("(t*(x*y-a3)*y*z + s*(z*w-a4)*x*w)/(t*(t-s))") + f("(2*(x*y+a1)+z*w+a2)*x*z*w/(t*(t-1))"));
    s.pi = bind({{"x", "z"}, {"y", "w"}, {"z", "x"}, {"w", "y"}, {"t", "s"}, {"s", "t"}, {"a3", "a4"}, {"a4", "a3"}});
    s.constraint = constraint("2*a1+a2+a3+a4+a5+a6", "1", "a6");
    symmetric(s);
    out.push_back(std::move(s));
  }
  {
    HamiltonianSystem s{"uraS", xyzw, ts, {}, a16, {}, 5, {}};
    s.hamiltonians.push_back(H(PainleveKind::VI, {"1-a1-a2-a3-a5", "-a1-a2", "a2", "a1+a5", "a1+a3"}) +
                             f("a4*x*y/(t-s)") + f("(a2*(s-1)*z*w + 2*(s-1)*x*y*z*w)/((t-1)*(t-s))") +
                             f("(t*y + (x*y+a2)*x)*z*w/(t*(t-1))") -
                             f("(t*(z*w+a4)*y*z + s*(x*y+a2)*x*w)/(t*(t-s))"));
    s.pi = bind({{"x", "z"}, {"y", "w"}, {"z", "x"}, {"w", "y"}, {"t", "s"}, {"s", "t"}, {"a2", "a4"}, {"a4", "a2"}});
    s.constraint = constraint("2*a1+a2+a3+a4+a5+a6", "1", "a6");
    symmetric(s);
    out.push_back(std::move(s));
  }
  {
    HamiltonianSystem s{"SdeGH-3v", xyzwqp, tsu, {}, vars({"a1", "a2", "a3", "a4", "a5", "a6", "a7"}), {}, 5, {}};
    s.hamiltonians.push_back(H(PainleveKind::VI, {"1-a1-a2-a3-a5", "-a1-a2", "a2", "a1+a5", "a1+a3"}) +
                             R("SdeGH-3v", "x", "y", "z", "w", "t", "s", "a2", "a4") +
                             R("SdeGH-3v", "x", "y", "q", "p", "t", "u", "a2", "a7"));
    s.pi = bind({{"x", "z"}, {"y", "w"}, {"z", "q"}, {"w", "p"}, {"q", "x"}, {"p", "y"}, {"t", "s"}, {"s", "u"},
                 {"u", "t"}, {"a2", "a4"}, {"a4", "a7"}, {"a7", "a2"}});
    s.constraint = constraint("2*a1+a2+a3+a4+a5+a6+a7", "1", "a7");
    symmetric(s);
    out.push_back(std::move(s));
  }
  {
    HamiltonianSystem s{"dV", xyzw, ts, {}, vars({"eta", "a0", "a1", "a2", "a3", "nu"}), {}, 5, {}};
    s.hamiltonians.push_back(
        f("(x^2*(x-t)*y^2 + 2*x^2*z*y*w + x*z*(z-s)*w^2"
          " - ((a0+a2-1)*x^2 + a1*x*(x-t) + eta*(x-t) + eta*t*z)*y"
          " - ((a0+a1-1)*x*z + a2*x*(z-s) - eta*(s-1)*z)*w + nu*(nu+a3)*x)/t^2"));
    s.hamiltonians.push_back(
        f("(x^2*z*y^2 + 2*x*z*(z-s)*y*w + (z*(z-1)*(z-s) + s*(s-1)*x*z/t)*w^2"
          " - ((a0+a1-1)*x*z + a2*x*(z-s) - eta*(s-1)*z)*y"
          " - ((a0-1)*z*(z-1) + a1*z*(z-s) + a2*(z-1)*(z-s) + s*(s-1)*(a2*x + eta*z)/t)*w"
          " + nu*(nu+a3)*z)/(s*(s-1))"));
    s.constraint = constraint("2*nu+a0+a1+a2+a3", "1", "nu");
    out.push_back(std::move(s));
  }
  {
    HamiltonianSystem s{"dVV", xyzw, ts, {}, vars({"a1", "a2", "a3", "a4", "a5"}), {}, 4, {}};
    s.hamiltonians.push_back(H(PainleveKind::V, {"a3", "a1", "a4"}) - f("a2*s*x*y/(t*(s-t))") -
                             f("a1*z*w/(s-t)") +
                             f("(t*x^2*y*w + t*y*z*w + a1*t*x*w + s*y*z^2*w - s*y*z*w + a2*s*y*z"
                               " - 2*t*x*y*z*w)/(t*(s-t))"));
    s.pi = bind({{"x", "z"}, {"y", "w"}, {"z", "x"}, {"w", "y"}, {"t", "s"}, {"s", "t"}, {"a1", "a2"}, {"a2", "a1"}});
    s.constraint = constraint("a1+a2+a3+a4+a5", "1", "a5");
    symmetric(s);
    out.push_back(std::move(s));
  }
  {
    HamiltonianSystem s{"deGHS", xyzwqp, tsu, {}, a16, {}, 4, {}};
    s.hamiltonians.push_back(H(PainleveKind::V, {"a4", "a1", "a5"}) +
                             R("deGHS", "x", "y", "z", "w", "t", "s", "a1", "a2") +
                             R("deGHS", "x", "y", "q", "p", "t", "u", "a1", "a3"));
    s.pi = bind({{"x", "z"}, {"y", "w"}, {"z", "q"}, {"w", "p"}, {"q", "x"}, {"p", "y"}, {"t", "s"}, {"s", "u"},
                 {"u", "t"}, {"a1", "a2"}, {"a2", "a3"}, {"a3", "a1"}});
    s.constraint = constraint("a1+a2+a3+a4+a5+a6", "1", "a6");
    symmetric(s);
    out.push_back(std::move(s));
  }
  {
    HamiltonianSystem s{"SdeG3", xyzw, ts, {}, vars({"a1", "a2", "a3", "a4"}), {}, 4, {}};
    s.hamiltonians.push_back(H(PainleveKind::IV, {"a1", "a2"}) + f("a3*x*y/(t-s)") + f("a2*z*w/(t-s)") -
                             f("(x^2*y*w - 2*(t-s)*y*z*w - 2*x*y*z*w + y*z^2*w + a3*y*z + a2*x*w)/(t-s)"));
    s.pi = bind({{"x", "z"}, {"y", "w"}, {"z", "x"}, {"w", "y"}, {"t", "s"}, {"s", "t"}, {"a2", "a3"}, {"a3", "a2"}});
    s.constraint = constraint("a1+a2+a3+a4", "1", "a4");
    symmetric(s);
    out.push_back(std::move(s));
  }
  {
    HamiltonianSystem s{"SdeGH3", xyzwqp, tsu, {}, vars({"a1", "a2", "a3", "a4", "a5"}), {}, 4, {}};
    s.hamiltonians.push_back(H(PainleveKind::IV, {"a1", "a2"}) +
                             R("SdeGH3", "x", "y", "z", "w", "t", "s", "a2", "a3") +
                             R("SdeGH3", "x", "y", "q", "p", "t", "u", "a2", "a4"));
    s.pi = bind({{"x", "z"}, {"y", "w"}, {"z", "q"}, {"w", "p"}, {"q", "x"}, {"p", "y"}, {"t", "s"}, {"s", "u"},
                 {"u", "t"}, {"a2", "a3"}, {"a3", "a4"}, {"a4", "a2"}});
    s.constraint = constraint("a1+a2+a3+a4+a5", "1", "a5");
    symmetric(s);
    out.push_back(std::move(s));
  }
  {
    HamiltonianSystem s{"SdeGa", xyzw, ts, {}, vars({"a0", "a1", "a2", "a3"}), {}, 4, {}};
    s.hamiltonians.push_back(H(PainleveKind::III, {"a0", "a1"}) + f("a2*s*x*y/(t*(t-s))") + f("a0*z*w/(t-s)") -
                             f("(t*y*z^2*w + s*x^2*y*w - 2*t*x*y*z*w + a2*t*y*z + a0*s*x*w)/(t*(t-s))"));
    s.pi = bind({{"x", "z"}, {"y", "w"}, {"z", "x"}, {"w", "y"}, {"t", "s"}, {"s", "t"}, {"a0", "a2"}, {"a2", "a0"}});
    s.constraint = constraint("a0+2*a1+a2+a3", "1", "a3");
    symmetric(s);
    out.push_back(std::move(s));
  }
  {
    HamiltonianSystem s{"SdeGaH-3v", xyzwqp, tsu, {}, vars({"a0", "a1", "a2", "a3", "a4"}), {}, 4, {}};
    s.hamiltonians.push_back(H(PainleveKind::III, {"a0", "a1"}) +
                             R("SdeGaH-3v", "x", "y", "z", "w", "t", "s", "a0", "a2") +
                             R("SdeGaH-3v", "x", "y", "q", "p", "t", "u", "a0", "a4"));
    s.pi = bind({{"x", "z"}, {"y", "w"}, {"z", "q"}, {"w", "p"}, {"q", "x"}, {"p", "y"}, {"t", "s"}, {"s", "u"},
                 {"u", "t"}, {"a0", "a2"}, {"a2", "a4"}, {"a4", "a0"}});
    s.constraint = constraint("a0+2*a1+a2+a3+a4", "1", "a4");
    symmetric(s);
    out.push_back(std::move(s));
  }
  {
    HamiltonianSystem s{"ASdeGa", xyzw, ts, {}, vars({"eta0", "eta1", "a1", "a2", "a3", "a4"}), {}, 5, {}};
    s.hamiltonians.push_back(
        f("(-x^3*y^2 + s*x^2*y^2 - (2*a1+a2)*x^2*y + ((2*a1+a2)*s + eta1*t)*x*y)/(t*s)") -
        f("(a1*(a1+a2)*x + eta1*t*s*y)/(t*s)") +
        f("(z^3*w^2 - t*z^2*w^2 + (2*a1+a2)*z^2*w + (a3*t - eta0*s)*z*w)/t^2") +
        f("(a1*(a1+a2)*z + eta0*t*s*w)/t^2") - f("(eta0*s - a3*t)*x*y/t^2") + f("eta1*z*w/s") -
        f("x*z*(2*(t*x-s*z)*y*w - s*x*y^2 + t*z*w^2 - (2*a1+a2)*(s*y-t*w))/(t^2*s)"));
    s.pi = bind({{"x", "z"}, {"y", "w"}, {"z", "x"}, {"w", "y"}, {"t", "s"}, {"s", "t"}, {"eta0", "eta1"},
                 {"eta1", "eta0"}, {"a3", "a4"}, {"a4", "a3"}});
    s.constraint = constraint("2*a1+a2+a3+a4", "1", "a4");
    symmetric(s);
    out.push_back(std::move(s));
  }
  {
    HamiltonianSystem s{"SdeG4", xyzw, ts, {}, vars({"a1", "a2", "a3"}), {}, 4, {}};
    s.hamiltonians.push_back(H(PainleveKind::II, {"a3"}) + f("a1*x*y/(t-s)") - f("a1*y*z/(t-s)") -
                             f("a3*x*w/(t-s)") + f("a3*z*w/(t-s)") - f("(2*(x-z)^2 - (t-s))*y*w/(2*(t-s))"));
    s.pi = bind({{"x", "z"}, {"y", "w"}, {"z", "x"}, {"w", "y"}, {"t", "s"}, {"s", "t"}, {"a1", "a3"}, {"a3", "a1"}});
    s.constraint = constraint("a1+a2+a3", "1", "a3");
    symmetric(s);
    out.push_back(std::move(s));
  }
  {
    HamiltonianSystem s{"Kimura-times", xyzw, vars({"T", "S"}), {}, vars({"a1", "a2", "a3"}), {}, 4, {}};
    s.hamiltonians.push_back(f("-x^2*y + y^2/2 - T*y/2 - a3*x - z^2*w + w^2/2 - S*w/2 - a1*z - T*w/2 + y*w"));
    s.hamiltonians.push_back(f("-(x-z)*(x*w-z*w-a1)*y/S + y*w/2 - T*w/2 - a3*x*w/S + a3*z*w/S - z^2*w + w^2/2"
                               " - S*w/2 - a1*z"));
    s.constraint = constraint("a1+a2+a3", "1", "a3");
    out.push_back(std::move(s));
  }
  {
    HamiltonianSystem s{"autoG14", pairs({{"q1", "p1"}, {"q2", "p2"}}), ts, {}, vars({"a0", "a1", "a2"}), {}, 4, {}};
    s.hamiltonians.push_back(f("-q1^2*p1 + p1^2/2 - a2*q1 - q2^2*p2 + p2^2/2 - a0*q2 + p1*p2"));
    s.hamiltonians.push_back(
        f("q1^2*p1*p2 + q2^2*p1*p2 - 2*q1*p1*q2*p2 - a0*q1*p1 - a2*q2*p2 + a0*p1*q2 + a2*q1*p2"));
    s.constraint = constraint("a0+a1+a2", "0", "a2");
    out.push_back(std::move(s));
  }
  {
    HamiltonianSystem s{"SdeGaK", xyzwqp, tsu, {}, vars({"a1", "a2", "a3", "a4"}), {}, 4, {}};
    s.hamiltonians.push_back(H(PainleveKind::II, {"a3"}) + R("SdeGaK", "x", "y", "z", "w", "t", "s", "a3", "a1") +
                             R("SdeGaK", "x", "y", "q", "p", "t", "u", "a3", "a4"));
    s.pi = bind({{"x", "z"}, {"y", "w"}, {"z", "q"}, {"w", "p"}, {"q", "x"}, {"p", "y"}, {"t", "s"}, {"s", "u"},
                 {"u", "t"}, {"a1", "a4"}, {"a3", "a1"}, {"a4", "a3"}});
    s.constraint = constraint("a1+a2+a3+a4", "1", "a4");
    symmetric(s);
    out.push_back(std::move(s));
  }
  return out;
}

const std::vector<HamiltonianSystem>& registry() {
  static const std::vector<HamiltonianSystem> systems = build();
  return systems;
}

}  // namespace

Bindings Constraint::elimination() const {
  const std::vector<Polynomial> c = relation.coefficients_in(solved_for);
  if (c.size() != 2 || !c[1].is_constant()) throw std::logic_error("constraint is not affine in " +
                                                                   std::string(solved_for.name()));
  return {{solved_for, RationalFunction(-c[0]) / RationalFunction(c[1])}};
}

std::vector<Var> HamiltonianSystem::phase_vars() const {
  std::vector<Var> out;
  for (const auto& [q, p] : pairs) {
    out.push_back(q);
    out.push_back(p);
  }
  return out;
}

VarSet HamiltonianSystem::phase_set() const {
  VarSet s;
  for (const auto& [q, p] : pairs) {
    s.set(q.id());
    s.set(p.id());
  }
  return s;
}

std::size_t HamiltonianSystem::time_index(Var t) const {
  const auto it = std::find(times.begin(), times.end(), t);
  if (it == times.end()) throw std::out_of_range("not a time of " + name + ": " + std::string(t.name()));
  return static_cast<std::size_t>(it - times.begin());
}

RationalFunction painleve_hamiltonian(PainleveKind kind, Var x, Var y, Var t,
                                      const std::vector<RationalFunction>& params) {
  const PainleveTemplate tpl = painleve_template(kind);
  if (params.size() != tpl.arity)
    throw std::invalid_argument("Painleve Hamiltonian expects " + std::to_string(tpl.arity) + " parameters, got " +
                                std::to_string(params.size()));
  return instantiate(tpl.text, {"x", "y", "t"}, {x, y, t}, params);
}

const std::vector<std::string>& coupling_families() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : coupling_templates()) out.push_back(k);
    return out;
  }();
  return names;
}

RationalFunction coupling_R(std::string_view family, const CouplingArgs& a) {
  const auto& table = coupling_templates();
  const auto it = table.find(family);
  if (it == table.end()) throw std::invalid_argument("unknown coupling family '" + std::string(family) + "'");
  return instantiate(it->second, {"x", "y", "z", "w", "t", "s"}, {a.ql, a.pl, a.qm, a.pm, a.tl, a.tm}, {a.alpha, a.beta});
}

VectorField vector_field(const HamiltonianSystem& sys, std::size_t time_index) {
  const RationalFunction& h = sys.hamiltonians.at(time_index);
  VectorField out;
  for (const auto& [q, p] : sys.pairs) {
    out.push_back(h.derivative(p));
    out.push_back(-h.derivative(q));
  }
  return out;
}

const HamiltonianSystem& registry_get(std::string_view name) {
  for (const auto& s : registry())
    if (s.name == name) return s;
  throw std::out_of_range("unknown system '" + std::string(name) + "'");
}

const std::vector<std::string>& registry_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> out;
    for (const auto& s : registry()) out.push_back(s.name);
    return out;
  }();
  return keys;
}

std::string dump(const HamiltonianSystem& sys) {
  std::ostringstream os;
  os << "system: " << sys.name << '\n' << "pairs:";
  for (const auto& [q, p] : sys.pairs) os << " (" << q.name() << ',' << p.name() << ')';
  os << "\ntimes:";
  for (Var t : sys.times) os << ' ' << t.name();
  os << "\nparams:";
  for (Var a : sys.params) os << ' ' << a.name();
  os << "\nconstraint: " << (sys.constraint ? sys.constraint->text : "none") << '\n';
  os << "degree: " << sys.degree_record << '\n';
  for (std::size_t k = 0; k < sys.hamiltonians.size(); ++k)
    os << "H" << k + 1 << "[" << sys.times[k].name() << "]: " << sys.hamiltonians[k].to_canonical() << '\n';
  return os.str();
}

}  // namespace garnier
