#include <map>

#include "garnier/transforms.hpp"

namespace garnier {

namespace {

struct ChartRow {
  const char* system;
  const char* label;
  std::vector<const char*> forward;
  std::vector<const char*> inverse;
};

// Inverses were solved by hand from the triangular structure and are checked
// by round trip in the tests.
const std::vector<ChartRow>& chart_rows() {
  static const std::vector<ChartRow> rows{
    // G11111
    {"G11111", "chart1",
     {"1/x", "-x*(x*y+z*w+a1)", "z/x", "x*w"},
     {"1/X", "-X*(W*Z+X*Y+a1)", "Z/X", "W*X"}},
    {"G11111", "chart2",
     {"1/x", "-x*(x*y+z*w+a1+a2)", "z/x", "x*w"},
     {"1/X", "-X*(W*Z+X*Y+a1+a2)", "Z/X", "W*X"}},
    {"G11111", "chart3",
     {"-y*(x*y-a3)", "1/y", "z", "w"},
     {"Y*(-X*Y+a3)", "1/Y", "Z", "W"}},
    {"G11111", "chart4",
     {"x", "y", "-w*(z*w-a4)", "1/w"},
     {"X", "Y", "W*(-W*Z+a4)", "1/W"}},
    {"G11111", "chart5",
     {"-((x+z-1)*y-a5)*y", "1/y", "z", "w-y"},
     {"-X*Y^2+Y*a5-Z+1", "1/Y", "Z", "(W*Y+1)/Y"}},
    {"G11111", "chart6",
     {"-((x+t*z/s-t)*y-a6)*y", "1/y", "z", "w-t*y/s"},
     {"(-X*Y^2*s+Y*a6*s-Z*t+s*t)/s", "1/Y", "Z", "(W*Y*s+t)/(Y*s)"}},
    // uraS
    {"uraS", "chart1",
     {"1/x", "-x*(x*y+a2)", "z", "w"},
     {"1/X", "-X*(X*Y+a2)", "Z", "W"}},
    {"uraS", "chart2",
     {"1/x", "-x*(x*y+z*w-a1)", "z/x", "x*w"},
     {"1/X", "X*(-W*Z-X*Y+a1)", "Z/X", "W*X"}},
    {"uraS", "chart3",
     {"x", "y", "1/z", "-(z*w+a4)*z"},
     {"X", "Y", "1/Z", "-Z*(W*Z+a4)"}},
    {"uraS", "chart4",
     {"-(x*y+z*w-(a1+a3))*y", "1/y", "z*y", "w/y"},
     {"Y*(-W*Z-X*Y+a1+a3)", "1/Y", "Y*Z", "W/Y"}},
    {"uraS", "chart5",
     {"-((x-1)*y+(z-1)*w-(a1+a5))*y", "1/y", "(z-1)*y", "w/y"},
     {"-W*Y*Z-X*Y^2+Y*a1+Y*a5+1", "1/Y", "Y*Z+1", "W/Y"}},
    {"uraS", "chart6",
     {"-((x-t)*y+(z-s)*w-(a1+a6))*y", "1/y", "(z-s)*y", "w/y"},
     {"-W*Y*Z-X*Y^2+Y*a1+Y*a6+t", "1/Y", "Y*Z+s", "W/Y"}},
    // SdeGH-3v
    {"SdeGH-3v", "chart1",
     {"1/x", "-x*(x*y+z*w+q*p-a1)", "z/x", "x*w", "q/x", "x*p"},
     {"1/X", "X*(-P*Q-W*Z-X*Y+a1)", "Z/X", "W*X", "Q/X", "P*X"}},
    {"SdeGH-3v", "chart2",
     {"1/x", "-x*(x*y+a2)", "z", "w", "q", "p"},
     {"1/X", "-X*(X*Y+a2)", "Z", "W", "Q", "P"}},
    {"SdeGH-3v", "chart3",
     {"-(x*y+z*w+q*p-(a1+a3))*y", "1/y", "z*y", "w/y", "q*y", "p/y"},
     {"Y*(-P*Q-W*Z-X*Y+a1+a3)", "1/Y", "Y*Z", "W/Y", "Q*Y", "P/Y"}},
    {"SdeGH-3v", "chart4",
     {"x", "y", "1/z", "-(z*w+a4)*z", "q", "p"},
     {"X", "Y", "1/Z", "-Z*(W*Z+a4)", "Q", "P"}},
    {"SdeGH-3v", "chart5",
     {"-((x-1)*y+(z-1)*w+(q-1)*p-(a1+a5))*y", "1/y", "(z-1)*y", "w/y", "(q-1)*y", "p/y"},
     {"-P*Q*Y-W*Y*Z-X*Y^2+Y*a1+Y*a5+1", "1/Y", "Y*Z+1", "W/Y", "Q*Y+1", "P/Y"}},
    {"SdeGH-3v", "chart6",
     {"-((x-t)*y+(z-s)*w+(q-u)*p-(a1+a6))*y", "1/y", "(z-s)*y", "w/y", "(q-u)*y", "p/y"},
     {"-P*Q*Y-W*Y*Z-X*Y^2+Y*a1+Y*a6+t", "1/Y", "Y*Z+s", "W/Y", "Q*Y+u", "P/Y"}},
    {"SdeGH-3v", "chart7",
     {"x", "y", "z", "w", "1/q", "-(q*p+a7)*q"},
     {"X", "Y", "Z", "W", "1/Q", "-Q*(P*Q+a7)"}},
    // dV
    {"dV", "chart1",
     {"1/x", "-(x*y+z*w+nu+a3)*x", "z/x", "x*w"},
     {"1/X", "-X*(W*Z+X*Y+a3+nu)", "Z/X", "W*X"}},
    {"dV", "chart2",
     {"1/x", "-(x*y+z*w+nu)*x", "z/x", "x*w"},
     {"1/X", "-X*(W*Z+X*Y+nu)", "Z/X", "W*X"}},
    {"dV", "chart3",
     {"x", "y-a1/x+eta*(z-1)/x^2", "z", "w-eta/x"},
     {"X", "(X^2*Y+X*a1-Z*eta+eta)/X^2", "Z", "(W*X+eta)/X"}},
    {"dV", "chart4",
     {"x", "y", "-(z*w-a2)*w", "1/w"},
     {"X", "Y", "W*(-W*Z+a2)", "1/W"}},
    {"dV", "chart5",
     {"-((x+t*z/s-t)*y-a0)*y", "1/y", "z", "w-t*y/s"},
     {"(-X*Y^2*s+Y*a0*s-Z*t+s*t)/s", "1/Y", "Z", "(W*Y*s+t)/(Y*s)"}},
    // dVV
    {"dVV", "chart1",
     {"1/x", "-(y*x+a1)*x", "z", "w"},
     {"1/X", "-X*(X*Y+a1)", "Z", "W"}},
    {"dVV", "chart2",
     {"x", "y", "1/z", "-(z*w+a2)*z"},
     {"X", "Y", "1/Z", "-Z*(W*Z+a2)"}},
    {"dVV", "chart3",
     {"-(y*x+w*z-a3)*y", "1/y", "z*y", "w/y"},
     {"Y*(-W*Z-X*Y+a3)", "1/Y", "Y*Z", "W/Y"}},
    {"dVV", "chart4",
     {"-((x-1)*y+(z-1)*w-a4)*y", "1/y", "(z-1)*y", "w/y"},
     {"-W*Y*Z-X*Y^2+Y*a4+1", "1/Y", "Y*Z+1", "W/Y"}},
    {"dVV", "chart5",
     {"1/x", "-((y+t*w/s+t)*x+a5)*x", "z-t*x/s", "w"},
     {"1/X", "-(W*t+X^2*Y*s+X*a5*s+s*t)/s", "(X*Z*s+t)/(X*s)", "W"}},
    // deGHS
    {"deGHS", "chart1",
     {"1/x", "-(y*x+a1)*x", "z", "w", "q", "p"},
     {"1/X", "-X*(X*Y+a1)", "Z", "W", "Q", "P"}},
    {"deGHS", "chart2",
     {"x", "y", "1/z", "-(z*w+a2)*z", "q", "p"},
     {"X", "Y", "1/Z", "-Z*(W*Z+a2)", "Q", "P"}},
    {"deGHS", "chart3",
     {"x", "y", "z", "w", "1/q", "-(q*p+a3)*q"},
     {"X", "Y", "Z", "W", "1/Q", "-Q*(P*Q+a3)"}},
    {"deGHS", "chart4",
     {"-(y*x+w*z+p*q-a4)*y", "1/y", "z*y", "w/y", "q*y", "p/y"},
     {"Y*(-P*Q-W*Z-X*Y+a4)", "1/Y", "Y*Z", "W/Y", "Q*Y", "P/Y"}},
    {"deGHS", "chart5",
     {"-((x-1)*y+(z-1)*w+(q-1)*p-a5)*y", "1/y", "(z-1)*y", "w/y", "(q-1)*y", "p/y"},
     {"-P*Q*Y-W*Y*Z-X*Y^2+Y*a5+1", "1/Y", "Y*Z+1", "W/Y", "Q*Y+1", "P/Y"}},
    {"deGHS", "chart6",
     {"1/x", "-((y+t*w/s+t*p/u+t)*x+a6)*x", "z-t*x/s", "w", "q-t*x/u", "p"},
     {"1/X", "-(P*s*t+W*t*u+X^2*Y*s*u+X*a6*s*u+s*t*u)/(s*u)", "(X*Z*s+t)/(X*s)", "W", "(Q*X*u+t)/(X*u)", "P"}},
    // SdeG3
    {"SdeG3", "chart1",
     {"-(x*y+z*w-a1)*y", "1/y", "z*y", "w/y"},
     {"Y*(-W*Z-X*Y+a1)", "1/Y", "Y*Z", "W/Y"}},
    {"SdeG3", "chart2",
     {"1/x", "-(y*x+a2)*x", "z", "w"},
     {"1/X", "-X*(X*Y+a2)", "Z", "W"}},
    {"SdeG3", "chart3",
     {"x", "y", "1/z", "-(z*w+a3)*z"},
     {"X", "Y", "1/Z", "-Z*(W*Z+a3)"}},
    {"SdeG3", "chart4",
     {"-((x-2*y-2*w+2*t)*y+(z-2*y-2*w+2*s)*w-a4)*y", "1/y", "(z-2*y-2*w+2*s)*y", "w/y"},
     {"-(W*Y^2*Z-2*W+X*Y^3-Y^2*a4+2*Y*t-2)/Y", "1/Y", "-(-2*W-Y^2*Z+2*Y*s-2)/Y", "W/Y"}},
    // SdeGH3
    {"SdeGH3", "chart1",
     {"-(y*x+w*z+p*q-a1)*y", "1/y", "z*y", "w/y", "q*y", "p/y"},
     {"Y*(-P*Q-W*Z-X*Y+a1)", "1/Y", "Y*Z", "W/Y", "Q*Y", "P/Y"}},
    {"SdeGH3", "chart2",
     {"1/x", "-(y*x+a2)*x", "z", "w", "q", "p"},
     {"1/X", "-X*(X*Y+a2)", "Z", "W", "Q", "P"}},
    {"SdeGH3", "chart3",
     {"x", "y", "1/z", "-(w*z+a3)*z", "q", "p"},
     {"X", "Y", "1/Z", "-Z*(W*Z+a3)", "Q", "P"}},
    {"SdeGH3", "chart4",
     {"x", "y", "z", "w", "1/q", "-(q*p+a4)*q"},
     {"X", "Y", "Z", "W", "1/Q", "-Q*(P*Q+a4)"}},
    {"SdeGH3", "chart5",
     {"-((x-2*y-2*w-2*p+2*t)*y+(z-2*y-2*w-2*p+2*s)*w+(q-2*y-2*w-2*p+2*u)*p-a5)*y", "1/y", "(z-2*y-2*w-2*p+2*s)*y", "w/y", "(q-2*y-2*w-2*p+2*u)*y", "p/y"},
     {"-(P*Q*Y^2-2*P+W*Y^2*Z-2*W+X*Y^3-Y^2*a5+2*Y*t-2)/Y", "1/Y", "-(-2*P-2*W-Y^2*Z+2*Y*s-2)/Y", "W/Y", "-(-2*P-Q*Y^2-2*W+2*Y*u-2)/Y", "P/Y"}},
    // SdeGa
    {"SdeGa", "chart0",
     {"1/x", "-(y*x+a0)*x", "z", "w"},
     {"1/X", "-X*(X*Y+a0)", "Z", "W"}},
    {"SdeGa", "chart1",
     {"x", "y+s/t*w+2*((z-s/t*x)*w-a1)/x+t/x^2", "(z-s/t*x)/x^2", "x^2*w"},
     {"X", "-(2*W*X*Z*t+W*s-X^2*Y*t-2*X*a1*t+t^2)/(X^2*t)", "X*(X*Z*t+s)/t", "W/X^2"}},
    {"SdeGa", "chart2",
     {"x", "y", "1/z", "-(z*w+a2)*z"},
     {"X", "Y", "1/Z", "-Z*(W*Z+a2)"}},
    {"SdeGa", "chart3",
     {"1/x", "-((y+w-1)*x+a3)*x", "z-x", "w"},
     {"1/X", "-W-X^2*Y-X*a3+1", "(X*Z+1)/X", "W"}},
    // SdeGaH-3v
    {"SdeGaH-3v", "chart0",
     {"1/x", "-(y*x+a0)*x", "z", "w", "q", "p"},
     {"1/X", "-X*(X*Y+a0)", "Z", "W", "Q", "P"}},
    {"SdeGaH-3v", "chart1",
     {"x", "y+s/t*w+u/t*p+2*((z-s/t*x)*w+(q-u/t*x)*p-a1)/x+t/x^2", "(z-s/t*x)/x^2", "x^2*w", "(q-u/t*x)/x^2", "x^2*p"},
     {"X", "-(2*P*Q*X*t+P*u+2*W*X*Z*t+W*s-X^2*Y*t-2*X*a1*t+t^2)/(X^2*t)", "X*(X*Z*t+s)/t", "W/X^2", "X*(Q*X*t+u)/t", "P/X^2"}},
    {"SdeGaH-3v", "chart2",
     {"x", "y", "1/z", "-(z*w+a2)*z", "q", "p"},
     {"X", "Y", "1/Z", "-Z*(W*Z+a2)", "Q", "P"}},
    {"SdeGaH-3v", "chart3",
     {"1/x", "-((y+w+p-1)*x+a3)*x", "z-x", "w", "q-x", "p"},
     {"1/X", "-P-W-X^2*Y-X*a3+1", "(X*Z+1)/X", "W", "(Q*X+1)/X", "P"}},
    {"SdeGaH-3v", "chart4",
     {"x", "y", "z", "w", "1/q", "-(q*p+a4)*q"},
     {"X", "Y", "Z", "W", "1/Q", "-Q*(P*Q+a4)"}},
    // ASdeGa
    {"ASdeGa", "chart1",
     {"1/x", "-(x*y+z*w+a1)*x", "z/x", "x*w"},
     {"1/X", "-X*(W*Z+X*Y+a1)", "Z/X", "W*X"}},
    {"ASdeGa", "chart2",
     {"1/x", "-(x*y+z*w+a1+a2)*x", "z/x", "x*w"},
     {"1/X", "-X*(W*Z+X*Y+a1+a2)", "Z/X", "W*X"}},
    {"ASdeGa", "chart3",
     {"x", "y-eta0/z", "z", "w-a3/z+eta0*(x-s)/z^2"},
     {"X", "(Y*Z+eta0)/Z", "Z", "(W*Z^2-X*eta0+Z*a3+eta0*s)/Z^2"}},
    {"ASdeGa", "chart4",
     {"x", "y-a4/x+eta1*(z-t)/x^2", "z", "w-eta1/x"},
     {"X", "(X^2*Y+X*a4-Z*eta1+eta1*t)/X^2", "Z", "(W*X+eta1)/X"}},
    // SdeG4
    {"SdeG4", "chart1",
     {"1/x", "-(y*x+a3)*x", "z", "w"},
     {"1/X", "-X*(X*Y+a3)", "Z", "W"}},
    {"SdeG4", "chart2",
     {"1/x", "-((y+w-2*x^2-t)*x-2*((z-x)*x-(t-s)/4)*(w/x)+a2)*x", "((z-x)*x-(t-s)/2)*x", "w/x^2"},
     {"1/X", "-(-4*W*X^3*Z+W*X^2*s-W*X^2*t+2*W+2*X^4*Y+2*X^3*a2-2*X^2*t-4)/(2*X^2)", "-(-2*X^3*Z+X^2*s-X^2*t-2)/(2*X)", "W/X^2"}},
    {"SdeG4", "chart3",
     {"x", "y", "1/z", "-(z*w+a1)*z"},
     {"X", "Y", "1/Z", "-Z*(W*Z+a1)"}},
    // SdeGaK
    {"SdeGaK", "chart1",
     {"1/x", "-(y*x+a3)*x", "z", "w", "q", "p"},
     {"1/X", "-X*(X*Y+a3)", "Z", "W", "Q", "P"}},
    {"SdeGaK", "chart2",
     {"1/x", "-((y+w+p-2*x^2-t)*x-2*((z-x)*x-(t-s)/4)*(w/x)-2*((q-x)*x-(t-u)/4)*(p/x)+a2)*x", "((z-x)*x-(t-s)/2)*x", "w/x^2", "((q-x)*x-(t-u)/2)*x", "p/x^2"},
     {"1/X", "-(-4*P*Q*X^3-P*X^2*t+P*X^2*u+2*P-4*W*X^3*Z+W*X^2*s-W*X^2*t+2*W+2*X^4*Y+2*X^3*a2-2*X^2*t-4)/(2*X^2)", "-(-2*X^3*Z+X^2*s-X^2*t-2)/(2*X)", "W/X^2", "(2*Q*X^3+X^2*t-X^2*u+2)/(2*X)", "P/X^2"}},
    {"SdeGaK", "chart3",
     {"x", "y", "1/z", "-(z*w+a1)*z", "q", "p"},
     {"X", "Y", "1/Z", "-Z*(W*Z+a1)", "Q", "P"}},
    {"SdeGaK", "chart4",
     {"x", "y", "z", "w", "1/q", "-(q*p+a4)*q"},
     {"X", "Y", "Z", "W", "1/Q", "-Q*(P*Q+a4)"}},
    // autoG14
    {"autoG14", "R0",
     {"q1", "p1", "1/q2", "-(q2*p2+a0)*q2"},
     {"X", "Y", "1/Z", "-Z*(W*Z+a0)"}},
    {"autoG14", "R1",
     {"1/q1", "-((p1+p2-2*q1^2)*q1-2*(q2-q1)*p2+a1)*q1", "(q2-q1)*q1^2", "p2/q1^2"},
     {"1/X", "-(-2*W*X^3*Z+W+X^4*Y+X^3*a1-2)/X^2", "(X^3*Z+1)/X", "W/X^2"}},
    {"autoG14", "R2",
     {"1/q1", "-(q1*p1+a2)*q1", "q2", "p2"},
     {"1/X", "-X*(X*Y+a2)", "Z", "W"}},
  };
  return rows;
}

const char* const kTargets[] = {"X", "Y", "Z", "W", "Q", "P"};

std::vector<RationalFunction> parse_all(const std::vector<const char*>& texts) {
  std::vector<RationalFunction> out;
  for (const char* t : texts) out.push_back(parse(t));
  return out;
}

std::vector<Var> chart_targets(std::size_t n) {
  std::vector<Var> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(Var::named(kTargets[k]));
  return out;
}

Bindings bind(std::initializer_list<std::pair<const char*, const char*>> items) {
  Bindings out;
  for (const auto& [name, expr] : items) out.emplace_back(Var::named(name), parse(expr));
  return out;
}

BirationalMap chart(const ChartRow& row) {
  const HamiltonianSystem& sys = registry_get(row.system);
  BirationalMap m;
  m.id = std::string(row.system) + ":" + row.label;
  m.source = sys.phase_vars();
  m.target = chart_targets(m.source.size());
  m.forward = parse_all(row.forward);
  m.inverse = parse_all(row.inverse);
  return m;
}

// Positional images: phase components, time images (empty when the times are
// fixed) and parameter images in the registry's parameter order (empty for
// none). Identity entries are dropped from the parameter map.
SymmetryTransformation sym(std::string_view system, const char* label, const std::vector<const char*>& phase,
                           const std::vector<const char*>& times = {}, const std::vector<const char*>& params = {},
                           bool alternative = false, std::string note = {}) {
  const HamiltonianSystem& sys = registry_get(system);
  SymmetryTransformation g;
  g.id = std::string(system) + ":" + label;
  g.source = g.target = sys.phase_vars();
  g.forward = parse_all(phase);
  if (g.forward.size() != g.source.size()) throw std::logic_error(g.id + ": wrong component count");
  if (!times.empty()) {
    g.source_times = g.target_times = sys.times;
    g.time_forward = parse_all(times);
  }
  if (!params.empty()) {
    if (params.size() != sys.params.size()) throw std::logic_error(g.id + ": wrong parameter count");
    for (std::size_t k = 0; k < params.size(); ++k) {
      RationalFunction e = parse(params[k]);
      if (e != RationalFunction::variable(sys.params[k])) g.params.emplace_back(sys.params[k], std::move(e));
    }
  }
  g.alternative = alternative;
  g.note = std::move(note);
  return g;
}

// The registry's pi as a symmetry.
SymmetryTransformation sym_pi(std::string_view system) {
  const HamiltonianSystem& sys = registry_get(system);
  SymmetryTransformation g;
  g.id = std::string(system) + ":pi";
  g.source = g.target = sys.phase_vars();
  auto image = [&](Var v) {
    for (const auto& [k, e] : sys.pi)
      if (k == v) return e;
    return RationalFunction::variable(v);
  };
  for (Var v : g.source) g.forward.push_back(image(v));
  g.source_times = g.target_times = sys.times;
  for (Var t : sys.times) g.time_forward.push_back(image(t));
  for (Var a : sys.params)
    if (image(a) != RationalFunction::variable(a)) g.params.emplace_back(a, image(a));
  return g;
}

std::vector<SymmetryTransformation> build_symmetries() {
  std::vector<SymmetryTransformation> v;
  const char* const kTyped = "parameter printed as a1+a1";

  // uraS
  {
    const char* E = "(x*y+z*w-a1)";
    const char* F = "(x*y+z*w-a1-a3)";
    const std::string xs = std::string("x*") + E + "/" + F, ys = std::string("y*") + F + "/" + E;
    const std::string zs = std::string("z*") + E + "/" + F, ws = std::string("w*") + F + "/" + E;
    v.push_back(sym("uraS", "u1", {"x+a2/y", "y", "z", "w"}, {}, {"a1+a1", "-a2", "a3", "a4", "a5", "a6"}, false,
                    kTyped));
    v.push_back(sym("uraS", "u1-alt", {"x+a2/y", "y", "z", "w"}, {}, {"a1+a2", "-a2", "a3", "a4", "a5", "a6"}, true,
                    "first parameter read as a1+a2"));
    v.push_back(sym("uraS", "u2", {"x", "y", "z+a4/w", "w"}, {}, {"a1+a4", "a2", "a3", "-a4", "a5", "a6"}));
    v.push_back(sym("uraS", "u3", {xs.c_str(), ys.c_str(), zs.c_str(), ws.c_str()}, {},
                    {"a1+a3", "a2", "-a3", "a4", "a5", "a6"}));
    v.push_back(sym("uraS", "phi1", {"1/x", "-(x*y+a2)*x", "1/z", "-(z*w+a4)*z"}, {"1/t", "1/s"},
                    {"-a1-a2-a3-a4", "a2", "a3", "a4", "1-a6", "1-a5"}));
    v.push_back(sym("uraS", "phi2", {"1-x", "-y", "1-z", "-w"}, {"1-t", "1-s"}, {"a1", "a2", "a5", "a4", "a3", "a6"}));
    v.push_back(sym("uraS", "phi3", {"(t-x)/(t-1)", "-(t-1)*y", "(s-z)/(s-1)", "-(s-1)*w"}, {"t/(t-1)", "s/(s-1)"},
                    {"a1", "a2", "a6", "a4", "a5", "a3"}));
    v.push_back(sym_pi("uraS"));
  }
  v.push_back(sym_pi("G11111"));

  // SdeGH-3v
  {
    const std::string E = "(x*y+z*w+q*p-a1)", F = "(x*y+z*w+q*p-a1-a3)";
    const std::string c[] = {"x*" + E + "/" + F, "y*" + F + "/" + E, "z*" + E + "/" + F,
                             "w*" + F + "/" + E, "q*" + E + "/" + F, "p*" + F + "/" + E};
    const char* s = "SdeGH-3v";
    v.push_back(sym(s, "u2", {"x+a2/y", "y", "z", "w", "q", "p"}, {}, {"a1+a1", "-a2", "a3", "a4", "a5", "a6", "a7"},
                    false, kTyped));
    v.push_back(sym(s, "u2-alt", {"x+a2/y", "y", "z", "w", "q", "p"}, {},
                    {"a1+a2", "-a2", "a3", "a4", "a5", "a6", "a7"}, true, "first parameter read as a1+a2"));
    v.push_back(sym(s, "u4", {"x", "y", "z+a4/w", "w", "q", "p"}, {}, {"a1+a4", "a2", "a3", "-a4", "a5", "a6", "a7"}));
    v.push_back(sym(s, "u7", {"x", "y", "z", "w", "q", "p+a7/p"}, {}, {"a1+a7", "a2", "a3", "a4", "a5", "a6", "-a7"},
                    false, "printed as p+a7/p"));
    v.push_back(sym(s, "u7-alt", {"x", "y", "z", "w", "q+a7/p", "p"}, {},
                    {"a1+a7", "a2", "a3", "a4", "a5", "a6", "-a7"}, true, "shift read as q+a7/p"));
    v.push_back(sym(s, "u3", {c[0].c_str(), c[1].c_str(), c[2].c_str(), c[3].c_str(), c[4].c_str(), c[5].c_str()},
                    {}, {"a1+a3", "a2", "-a3", "a4", "a5", "a6", "a7"}));
    v.push_back(sym(s, "phi1", {"1/x", "-(x*y+a2)*x", "1/z", "-(z*w+a4)*z", "1/q", "-(q*p+a7)*q"},
                    {"1/t", "1/s", "1/u"}, {"-a1-a2-a3-a4-a7", "a2", "a3", "a4", "1-a6", "1-a5", "a7"}));
    v.push_back(sym(s, "phi2", {"1-x", "-y", "1-z", "-w", "1-q", "-p"}, {"1-t", "1-s", "1-u"},
                    {"a1", "a2", "a5", "a4", "a3", "a6", "a7"}));
    v.push_back(sym(s, "phi3", {"(t-x)/(t-1)", "-(t-1)*y", "(s-z)/(s-1)", "-(s-1)*w", "(u-q)/(u-1)", "-(u-1)*p"},
                    {"t/(t-1)", "s/(s-1)", "u/(u-1)"}, {"a1", "a2", "a6", "a4", "a5", "a3", "a7"}));
    v.push_back(sym_pi(s));
  }

  // dV; parameter order eta, a0, a1, a2, a3, nu
  {
    const char* D = "(s*x+t*z-t*s)";
    const std::string y0 = std::string("y-s*a0/") + D, w0 = std::string("w-t*a0/") + D;
    v.push_back(sym("dV", "s0", {"x", y0.c_str(), "z", w0.c_str()}, {}, {"eta", "-a0", "a1", "a2", "-a3", "nu"}));
    v.push_back(sym("dV", "s1", {"x", "y-a1/x+eta*(z-1)/x^2", "z", "w-eta/x"}, {},
                    {"-eta", "a0", "-a1", "a2", "-a3", "nu"}));
    v.push_back(sym("dV", "s0-alt", {"x", y0.c_str(), "z", w0.c_str()}, {}, {"eta", "-a0", "a1", "a2", "a3", "nu+a0"},
                    true, "parameter map keeps the constraint"));
    v.push_back(sym("dV", "s1-alt", {"x", "y-a1/x+eta*(z-1)/x^2", "z", "w-eta/x"}, {},
                    {"-eta", "a0", "-a1", "a2", "a3", "nu+a1"}, true, "parameter map keeps the constraint"));
    v.push_back(sym("dV", "s2", {"x", "y", "z", "w-a2/z"}, {}, {"eta", "a0", "a1", "-a2", "a3", "nu+a2"}));
    v.push_back(sym("dV", "s3", {"x", "y", "z", "w"}, {}, {"eta", "a0", "a1", "a2", "-a3", "nu+a3"}));
  }

  // dVV
  {
    const char* D = "(y+t*w/s+t)";
    const std::string x5 = std::string("x+a5/") + D, z5 = std::string("z+t*a5/(s*") + D + ")";
    const char* E = "(x*y+z*w-a3)";
    const std::string p3[] = {std::string("-") + E + "/(t*x)", std::string("t*x*(x*y+a1)/") + E,
                              std::string("-") + E + "/(s*z)", std::string("s*z*(z*w+a2)/") + E};
    const char* G = "(y*(x-1)+w*(z-1)-a4)";
    const std::string p4[] = {std::string("-") + G + "/(t*(x-1))", std::string("t*(x-1)*((x-1)*y+a1)/") + G,
                              std::string("-") + G + "/(s*(z-1))", std::string("s*(z-1)*((z-1)*w+a2)/") + G};
    v.push_back(sym("dVV", "s1", {"x+a1/y", "y", "z", "w"}, {}, {"-a1", "a2", "a3+a1", "a4+a1", "a5"}));
    v.push_back(sym("dVV", "s2", {"x", "y", "z+a2/w", "w"}, {}, {"a1", "-a2", "a3+a2", "a4+a2", "a5"}));
    v.push_back(sym("dVV", "s5", {x5.c_str(), "y", z5.c_str(), "w"}, {}, {"a1", "a2", "a3+a5", "a4+a5", "-a5"}));
    v.push_back(sym("dVV", "pi1", {"z", "w", "x", "y"}, {"s", "t"}, {"a2", "a1", "a3", "a4", "a5"}));
    v.push_back(sym("dVV", "pi2", {"1-x", "-y", "1-z", "-w"}, {"-t", "-s"}, {"a1", "a2", "a4", "a3", "a5"}));
    v.push_back(sym("dVV", "pi3", {p3[0].c_str(), p3[1].c_str(), p3[2].c_str(), p3[3].c_str()}, {"-t", "-s"},
                    {"a1", "a2", "a4+a5-1", "a3+a5", "1-a5"}));
    v.push_back(sym("dVV", "pi4", {p4[0].c_str(), p4[1].c_str(), p4[2].c_str(), p4[3].c_str()}, {"t", "s"},
                    {"a1", "a2", "a3+a5-1", "a4+a5", "1-a5"}));
  }

  // deGHS
  {
    const char* s = "deGHS";
    const char* D = "(s*u*y+t*u*w+t*s*p+t*s*u)";
    const std::string x6 = std::string("x+a6*s*u/") + D, z6 = std::string("z+a6*t*u/") + D,
                      q6 = std::string("q+a6*t*s/") + D;
    const std::string E = "(x*y+z*w+q*p-a4)";
    const std::string p3[] = {"-" + E + "/(t*x)", "t*x*(x*y+a1)/" + E, "-" + E + "/(s*z)",
                              "s*z*(z*w+a2)/" + E, "-" + E + "/(u*q)", "u*q*(q*p+a3)/" + E};
    const std::string G = "((x-1)*y+(z-1)*w+(q-1)*p-a5)", N = "((1-x)*y+(1-z)*w+(1-q)*p+a5)";
    const std::string p4[] = {N + "/(t*(x-1))", "t*(x-1)*((x-1)*y+a1)/" + G, N + "/(s*(z-1))",
                              "s*(z-1)*((z-1)*w+a2)/" + G, N + "/(u*(q-1))", "u*(q-1)*((q-1)*p+a3)/" + G};
    v.push_back(sym(s, "s1", {"x+a1/y", "y", "z", "w", "q", "p"}, {}, {"-a1", "a2", "a3", "a4+a1", "a5+a1", "a6"}));
    v.push_back(sym(s, "s2", {"x", "y", "z+a2/w", "w", "q", "p"}, {}, {"a1", "-a2", "a3", "a4+a2", "a5+a2", "a6"},
                    false, "printed tuple omits q,p; read as unchanged"));
    v.push_back(sym(s, "s3", {"x", "y", "z", "w", "q+a3/p", "p"}, {}, {"a1", "a2", "-a3", "a4+a3", "a5+a3", "a6"}));
    v.push_back(sym(s, "s6", {x6.c_str(), "y", z6.c_str(), "w", q6.c_str(), "p"}, {},
                    {"a1", "a2", "a3", "a4+a6", "a5+a6", "-a6"}));
    v.push_back(sym(s, "pi1", {"z", "w", "q", "p", "x", "y"}, {"s", "u", "t"}, {"a3", "a2", "a1", "a4", "a5", "a6"},
                    false, "parameter order differs from the pi used to build H2, H3"));
    v.push_back(sym(s, "pi1-alt", {"z", "w", "q", "p", "x", "y"}, {"s", "u", "t"},
                    {"a2", "a3", "a1", "a4", "a5", "a6"}, true, "parameters as in the pi used to build H2, H3"));
    v.push_back(sym(s, "pi2", {"1-x", "-y", "1-z", "-w", "1-q", "-p"}, {"-t", "-s", "-u"},
                    {"a1", "a2", "a3", "a5", "a4", "a6"}));
    v.push_back(sym(s, "pi3", {p3[0].c_str(), p3[1].c_str(), p3[2].c_str(), p3[3].c_str(), p3[4].c_str(),
                               p3[5].c_str()},
                    {"-t", "-s", "-u"}, {"a1", "a2", "a3", "a5+a6-1", "a4+a6", "1-a6"}));
    v.push_back(sym(s, "pi4", {p4[0].c_str(), p4[1].c_str(), p4[2].c_str(), p4[3].c_str(), p4[4].c_str(),
                               p4[5].c_str()},
                    {"t", "s", "u"}, {"a1", "a2", "a3", "a4+a6-1", "a5+a6", "1-a6"}));
  }

  // SdeG3
  {
    const char* E = "(x*y+z*w-a1)";
    const std::string p3[] = {std::string("2*i*") + E + "/x", std::string("i*x*(x*y+a2)/(2*") + E + ")",
                              std::string("2*i*") + E + "/z", std::string("i*z*(z*w+a3)/(2*") + E + ")"};
    v.push_back(sym("SdeG3", "s2", {"x+a2/y", "y", "z", "w"}, {}, {"a1+a2", "-a2", "a3", "a4+a2"}));
    v.push_back(sym("SdeG3", "s3", {"x", "y", "z+a3/w", "w"}, {}, {"a1+a3", "a2", "-a3", "a4+a3"}));
    v.push_back(sym("SdeG3", "pi1", {"z", "w", "x", "y"}, {"s", "t"}, {"a1", "a3", "a2", "a4"}));
    v.push_back(sym("SdeG3", "pi2", {"i*(x-2*y-2*w+2*t)", "-i*y", "i*(z-2*y-2*w+2*s)", "-i*w"}, {"-i*t", "-i*s"},
                    {"a4", "a2", "a3", "a1"}));
    v.push_back(sym("SdeG3", "pi3", {p3[0].c_str(), p3[1].c_str(), p3[2].c_str(), p3[3].c_str()}, {"-i*t", "-i*s"},
                    {"-a1-a2-a3", "a2", "a3", "1+a1"}));
  }

  // SdeGH3
  {
    const char* s = "SdeGH3";
    const std::string E = "(x*y+z*w+q*p-a1)";
    const std::string p3[] = {"2*i*" + E + "/x", "i*x*(x*y+a2)/(2*" + E + ")", "2*i*" + E + "/z",
                              "i*z*(z*w+a3)/(2*" + E + ")", "2*i*" + E + "/q", "i*q*(q*p+a4)/(2*" + E + ")"};
    v.push_back(sym(s, "s2", {"x+a2/y", "y", "z", "w", "q", "p"}, {}, {"a1+a1", "-a2", "a3", "a4", "a5+a2"}, false,
                    kTyped));
    v.push_back(sym(s, "s2-alt", {"x+a2/y", "y", "z", "w", "q", "p"}, {}, {"a1+a2", "-a2", "a3", "a4", "a5+a2"},
                    true, "first parameter read as a1+a2"));
    v.push_back(sym(s, "s3", {"x", "y", "z+a3/w", "w", "q", "p"}, {}, {"a1+a3", "a2", "-a3", "a4", "a5+a3"}, false,
                    "printed tuple omits q,p; read as unchanged"));
    v.push_back(sym(s, "s4", {"x", "y", "z", "w", "q+a4/p", "p"}, {}, {"a1+a4", "a2", "a3", "-a4", "a5+a4"}));
    v.push_back(sym(s, "pi1", {"z", "w", "q", "p", "x", "y"}, {"s", "u", "t"}, {"a1", "a3", "a4", "a2", "a5"}));
    v.push_back(sym(s, "pi2",
                    {"i*(x-2*y-2*w-2*p+2*t)", "-i*y", "i*(z-2*y-2*w-2*p+2*s)", "-i*w", "i*(q-2*y-2*w-2*p+2*u)",
                     "-i*p"},
                    {"-i*t", "-i*s", "-i*u"}, {"a5", "a2", "a3", "a4", "a1"}));
    v.push_back(sym(s, "pi3", {p3[0].c_str(), p3[1].c_str(), p3[2].c_str(), p3[3].c_str(), p3[4].c_str(),
                               p3[5].c_str()},
                    {"-i*t", "-i*s", "-i*u"}, {"-a1-a2-a3-a4", "a2", "a3", "a4", "1+a1"}));
  }

  // SdeGa
  v.push_back(sym("SdeGa", "s0", {"x+a0/y", "y", "z", "w"}, {}, {"-a0", "a1+a0", "a2", "a3"}));
  v.push_back(sym("SdeGa", "s2", {"x", "y", "z+a2/w", "w"}, {}, {"a0", "a1+a2", "-a2", "a3"}));
  v.push_back(sym("SdeGa", "s3", {"x+a3/(y+w-1)", "y", "z+a3/(y+w-1)", "w"}, {}, {"a0", "a1+a3", "a2", "-a3"}));
  v.push_back(sym("SdeGa", "pi1", {"z", "w", "x", "y"}, {"s", "t"}, {"a2", "a1", "a0", "a3"}));
  v.push_back(sym("SdeGa", "pi2", {"t/x", "-(x*y+a0)*x/t", "s/z", "-(z*w+a2)*z/s"}, {},
                  {"a0", "a1+a3-1/2", "a2", "1-a3"}));
  v.push_back(sym("SdeGa", "pi3", {"x-z", "y", "-z", "1-y-w"}, {"t-s", "-s"}, {"a0", "a1", "a3", "a2"}));

  // SdeGaH-3v
  {
    const char* s = "SdeGaH-3v";
    const char* D = "/(y+w+p-1)";
    const std::string x3 = std::string("x+a3") + D, z3 = std::string("z+a3") + D, q3 = std::string("q+a3") + D;
    v.push_back(sym(s, "s0", {"x+a0/y", "y", "z", "w", "q", "p"}, {}, {"-a0", "a1+a0", "a2", "a3", "a4"}));
    v.push_back(sym(s, "s2", {"x", "y", "z+a2/w", "w", "q", "p"}, {}, {"a0", "a1+a2", "-a2", "a3", "a4"}));
    v.push_back(sym(s, "s3", {x3.c_str(), "y", z3.c_str(), "w", q3.c_str(), "p"}, {},
                    {"a0", "a1+a3", "a2", "-a3", "a4"}));
    v.push_back(sym(s, "s4", {"x", "y", "z", "w", "q+a4/p", "p"}, {}, {"a0", "a1+a4", "a2", "a3", "-a4"}));
    v.push_back(sym(s, "pi1", {"z", "w", "q", "p", "x", "y"}, {"s", "u", "t"}, {"a2", "a1", "a4", "a3", "a0"}));
    v.push_back(sym(s, "pi2", {"t/x", "-(x*y+a0)*x/t", "s/z", "-(z*w+a2)*z/s", "u/q", "-(q*p+a4)*q/u"}, {},
                    {"a0", "a1+a3-1/2", "a2", "1-a3", "a4"}));
  }

  // ASdeGa; parameter order eta0, eta1, a1..a4
  v.push_back(sym("ASdeGa", "s2", {"x", "y", "z", "w"}, {}, {"eta0", "eta1", "a1+a2", "-a2", "a3", "a4"}, false,
                  "printed with identity on the phase variables"));
  v.push_back(sym("ASdeGa", "s3", {"x", "y-eta0/z", "z", "w-a3/z+eta0*(x-s)/z^2"}, {},
                  {"-eta0", "eta1", "a1+a3", "a2", "-a3", "a4"}));
  v.push_back(sym("ASdeGa", "s4", {"x", "y-a4/x+eta1*(z-t)/x^2", "z", "w-eta1/x"}, {},
                  {"eta0", "-eta1", "a1+a4", "a2", "a3", "-a4"}));
  v.push_back(sym_pi("ASdeGa"));

  // SdeG4
  v.push_back(sym("SdeG4", "s1", {"x+a3/y", "y", "z", "w"}, {}, {"a1", "a2+a3", "-a3"}));
  v.push_back(sym("SdeG4", "s3", {"x", "y", "z+a1/w", "w"}, {}, {"-a1", "a2+a1", "a3"}));
  v.push_back(sym("SdeG4", "pi1", {"z", "w", "x", "y"}, {"s", "t"}, {"a3", "a2", "a1"}));

  // autoG14
  v.push_back(sym("autoG14", "s0", {"q1", "p1", "q2+a0/p2", "p2"}, {}, {"-a0", "a1+2*a0", "a2"}));
  v.push_back(sym("autoG14", "s1", {"q1", "p1-a1/(q1-q2)", "q2", "p2+a1/(q1-q2)"}, {}, {"a0+a1", "-a1", "a2+a1"}));
  v.push_back(sym("autoG14", "s2", {"q1+a2/p1", "p1", "q2", "p2"}, {}, {"a0", "a1+2*a2", "-a2"}));
  v.push_back(sym("autoG14", "pi", {"q2", "p2", "q1", "p1"}, {}, {"a2", "a1", "a0"}));

  // SdeGaK
  v.push_back(sym("SdeGaK", "s1", {"x+a3/y", "y", "z", "w", "q", "p"}, {}, {"a1", "a2+a3", "-a3", "a4"}));
  v.push_back(sym("SdeGaK", "s3", {"x", "y", "z+a1/w", "w", "q", "p"}, {}, {"-a1", "a2+a1", "a3", "a4"}));
  v.push_back(sym("SdeGaK", "s4", {"x", "y", "z", "w", "q+a4/p", "p"}, {}, {"a1", "a2+a4", "a3", "-a4"}));
  v.push_back(sym("SdeGaK", "pi1", {"z", "w", "q", "p", "x", "y"}, {"s", "u", "t"}, {"a3", "a2", "a4", "a1"}));
  v.push_back(sym("SdeGaK", "pi1-alt", {"z", "w", "q", "p", "x", "y"}, {"s", "u", "t"}, {"a4", "a2", "a1", "a3"}, true,
                  "inverse parameter permutation"));
  return v;
}

BirationalMap plain_map(const char* id, const std::vector<Var>& source, const std::vector<Var>& target,
                        const std::vector<const char*>& forward, const std::vector<const char*>& inverse = {}) {
  BirationalMap m;
  m.id = id;
  m.source = source;
  m.target = target;
  m.forward = parse_all(forward);
  m.inverse = parse_all(inverse);
  return m;
}

void set_times(BirationalMap& m, const std::vector<Var>& source, const std::vector<Var>& target,
               const std::vector<const char*>& forward, const std::vector<const char*>& inverse) {
  m.source_times = source;
  m.target_times = target;
  m.time_forward = parse_all(forward);
  m.time_inverse = parse_all(inverse);
}

std::vector<Var> names(std::initializer_list<const char*> list) {
  std::vector<Var> out;
  for (const char* n : list) out.push_back(Var::named(n));
  return out;
}

std::vector<Conjugacy> build_conjugacies() {
  std::vector<Conjugacy> out;
  const auto xyzw = names({"x", "y", "z", "w"});
  const auto ts = names({"t", "s"});
  {
    BirationalMap m = plain_map("G11111:S", xyzw, xyzw, {"x+(z*w+a1)/y", "y", "w/y", "-z*y"},
                                {"x-(a1-w*z)/y", "y", "-w/y", "z*y"});
    set_times(m, ts, ts, {"t", "t/s"}, {"t", "t/s"});
    out.push_back({m.id, "G11111", "uraS", m, {}});
  }
  {
    BirationalMap m = plain_map("dV:to-dVV", xyzw, xyzw, {"x*(x*y+z*w+nu)", "1/x", "x*w", "-z/x"});
    set_times(m, ts, ts, {"-1/t", "-s/t"}, {"-1/t", "-s/t"});
    m.note = "eta = 1";
    out.push_back(
        {m.id, "dV", "dVV", m, bind({{"eta", "1"}, {"a0", "a5"}, {"a1", "a4-a3"}, {"a3", "a1"}, {"nu", "a3"}})});
  }
  {
    BirationalMap m = plain_map("SdeG4:kimura", xyzw, xyzw, {"x", "y", "z", "w"}, {"x", "y", "z", "w"});
    set_times(m, ts, names({"T", "S"}), {"t", "s-t"}, {"T", "T+S"});
    out.push_back({m.id, "SdeG4", "Kimura-times", m, {}});
  }
  return out;
}

std::vector<BirationalMap> build_steps() {
  std::vector<BirationalMap> out;
  const auto xyzw = names({"x", "y", "z", "w"});
  out.push_back(plain_map("dVV:g1", xyzw, xyzw, {"x", "y+(z*w-a3)/x", "z/x", "x*w"}));
  out.push_back(plain_map("dVV:g2", xyzw, xyzw, {"x-(z*w-a1-a3)/y", "y", "z/y", "w*y"}));
  out.push_back(plain_map("dVV:g3", xyzw, xyzw, {"y", "-x", "1/z", "-(z*w+a2)*z"}));
  BirationalMap g4 = plain_map("dVV:g4", xyzw, xyzw, {"-x/t", "-t*y", "-z/s", "-s*w"});
  set_times(g4, names({"t", "s"}), names({"t", "s"}), {"-t", "-s"}, {"-t", "-s"});
  out.push_back(g4);

  BirationalMap mkdv = plain_map(
      "autoG14:mkdv", names({"q1", "p1", "q2", "p2"}), xyzw,
      {"q1", "p1+p2-q1^2", "2*q1^3-2*q1*p2+2*q2*p2+a0+a2",
       "-6*q1^4+8*q1^2*p2+6*q1^2*p1+2*q2^2*p2-4*q1*q2*p2-2*a0*(q1-q2)"});
  set_times(mkdv, names({"t", "s"}), names({"t", "S"}), {"t", "s/2"}, {"t", "2*S"});
  mkdv.symplectic = false;
  out.push_back(mkdv);
  return out;
}

DegenerationScheme scheme(const char* id, const char* source, const char* target,
                          const std::vector<const char*>& forward, const std::vector<const char*>& inverse,
                          const std::vector<const char*>& time_forward, const std::vector<const char*>& time_inverse,
                          Bindings old_params, Bindings rename_params, std::string note = {}) {
  const HamiltonianSystem& src = registry_get(source);
  DegenerationScheme d;
  d.id = id;
  d.source = source;
  d.target = target;
  d.map = plain_map(id, src.phase_vars(), chart_targets(forward.size()), forward, inverse);
  set_times(d.map, src.times, names({"T", "S"}), time_forward, time_inverse);
  d.map.params = old_params;
  d.old_params = std::move(old_params);
  d.rename = bind({{"X", "x"}, {"Y", "y"}, {"Z", "z"}, {"W", "w"}, {"T", "t"}, {"S", "s"}});
  d.rename.insert(d.rename.end(), rename_params.begin(), rename_params.end());
  d.eps = Var::named("eps");
  d.map.note = std::move(note);
  return d;
}

std::vector<DegenerationScheme> build_schemes() {
  std::vector<DegenerationScheme> out;
  out.push_back(scheme("uraS->dVV", "uraS", "dVV",
                       {"x/(x-1)", "-(x-1)*((x-1)*y+a2)", "z/(z-1)", "-(z-1)*((z-1)*w+a4)"},
                       {"X/(X-1)", "-(X-1)*((X-1)*Y+A1)", "Z/(Z-1)", "-(Z-1)*((Z-1)*W+A2)"},
                       {"(t-1)/eps", "(s-1)/eps"}, {"1+eps*T", "1+eps*S"},
                       bind({{"a1", "A3+A5-1"}, {"a2", "A1"}, {"a3", "1-A5"}, {"a4", "A2"}, {"a5", "A4+A5-1/eps"},
                             {"a6", "1-A3-A5+1/eps"}}),
                       bind({{"A1", "a1"}, {"A2", "a2"}, {"A3", "a3"}, {"A4", "a4"}, {"A5", "a5"}})));
  out.push_back(scheme("dVV->SdeG3", "dVV", "SdeG3",
                       {"x/(eps*(x-1))", "-eps*(x-1)*((x-1)*y+A2)", "z/(eps*(z-1))", "-eps*(z-1)*((z-1)*w+A2)"},
                       {"eps*X/(eps*X-1)", "-(eps*X-1)*((eps*X-1)*Y+eps*A2)/eps", "eps*Z/(eps*Z-1)",
                        "-(eps*Z-1)*((eps*Z-1)*W+eps*A2)/eps"},
                       {"eps*t-1/(2*eps)", "eps*s-1/(2*eps)"}, {"(1+2*eps*T)/(2*eps^2)", "(1+2*eps*S)/(2*eps^2)"},
                       bind({{"a1", "A1"}, {"a2", "A2"}, {"a3", "A3"}, {"a4", "-1/(2*eps^2)"},
                             {"a5", "1-A1-A2-A3+1/(2*eps^2)"}}),
                       bind({{"A1", "a2"}, {"A2", "a3"}, {"A3", "a1"}}),
                       "rename follows the parameter roles, not the printed A_k -> a_k"));
  out.push_back(scheme("dVV->SdeGa", "dVV", "SdeGa", {"-t*(x-1)", "-y/t", "-s*(z-1)", "-w/s"},
                       {"(t-X)/t", "-Y*t", "(s-Z)/s", "-W*s"}, {"-t/eps", "-s/eps"}, {"-eps*T", "-eps*S"},
                       bind({{"a1", "A0"}, {"a2", "A2"}, {"a3", "1/eps"}, {"a4", "2*A1-1/eps"}, {"a5", "A3"}}),
                       bind({{"A0", "a0"}, {"A1", "a1"}, {"A2", "a2"}, {"A3", "a3"}})));
  out.push_back(scheme("SdeG3->SdeG4", "SdeG3", "SdeG4",
                       {"(r2*eps^3*x-1)/(2*eps^2)", "r2*y/eps", "(r2*eps^3*z-1)/(2*eps^2)", "r2*w/eps"},
                       {"(1+2*eps^2*X)/(r2*eps^3)", "eps*Y/r2", "(1+2*eps^2*Z)/(r2*eps^3)", "eps*W/r2"},
                       {"r2*t/eps+1/eps^4", "r2*s/eps+1/eps^4"},
                       {"-(1-eps^4*T)/(r2*eps^3)", "-(1-eps^4*S)/(r2*eps^3)"},
                       bind({{"a1", "1/(4*eps^6)"}, {"a2", "A1"}, {"a3", "A3"}, {"a4", "A2-1/(4*eps^6)"}}),
                       bind({{"A1", "a3"}, {"A2", "a2"}, {"A3", "a1"}}),
                       "rename follows the parameter roles, not the printed A_k -> a_k"));
  return out;
}

struct Atlas {
  std::map<std::string, std::vector<BirationalMap>, std::less<>> charts;
  std::map<std::string, std::vector<SymmetryTransformation>, std::less<>> symmetries;
  std::vector<Conjugacy> conjugacies;
  std::vector<BirationalMap> steps;
  std::vector<DegenerationScheme> schemes;
  std::map<std::string, const BirationalMap*, std::less<>> by_id;
};

const Atlas& atlas() {
  // Heap allocated so the by_id pointers stay valid.
  static const Atlas& a = *[] {
    auto* p = new Atlas;
    Atlas& a = *p;
    for (const auto& row : chart_rows()) {
      BirationalMap m = chart(row);
      if (m.id == "G11111:chart6") {
        // The printed s-shift (1-x/t)*w does not close the two-form identity.
        m.gauge = parse_all({"(1-z/s)*y", "t*y*z/s^2"});
        m.note = "s gauge derived; printed (1-x/t)*w";
        m.alternative = true;
      }
      if (m.id == "uraS:chart6") m.gauge = parse_all({"y", "w"});
      a.charts[row.system].push_back(std::move(m));
    }
    for (auto& g : build_symmetries()) {
      const std::string system = g.id.substr(0, g.id.find(':'));
      a.symmetries[system].push_back(std::move(g));
    }
    a.conjugacies = build_conjugacies();
    a.steps = build_steps();
    a.schemes = build_schemes();
    for (const auto& [k, list] : a.charts)
      for (const auto& m : list) a.by_id[m.id] = &m;
    for (const auto& [k, list] : a.symmetries)
      for (const auto& m : list) a.by_id[m.id] = &m;
    for (const auto& c : a.conjugacies) a.by_id[c.id] = &c.map;
    for (const auto& m : a.steps) a.by_id[m.id] = &m;
    return p;
  }();
  return a;
}

}  // namespace

const std::vector<BirationalMap>& charts(std::string_view system) {
  static const std::vector<BirationalMap> none;
  registry_get(system);
  const auto& all = atlas().charts;
  const auto it = all.find(system);
  return it == all.end() ? none : it->second;
}

const std::vector<SymmetryTransformation>& symmetries(std::string_view system) {
  static const std::vector<SymmetryTransformation> none;
  registry_get(system);
  const auto& all = atlas().symmetries;
  const auto it = all.find(system);
  return it == all.end() ? none : it->second;
}

const BirationalMap& transform(std::string_view id) {
  const auto& all = atlas().by_id;
  const auto it = all.find(id);
  if (it == all.end()) throw std::out_of_range("unknown transform: " + std::string(id));
  return *it->second;
}

const std::vector<Conjugacy>& conjugacies() { return atlas().conjugacies; }

const std::vector<DegenerationScheme>& degeneration_schemes() { return atlas().schemes; }

const DegenerationScheme& degeneration(std::string_view id) {
  for (const auto& d : atlas().schemes)
    if (d.id == id) return d;
  throw std::out_of_range("unknown degeneration scheme: " + std::string(id));
}

std::vector<ManifestEntry> manifest() {
  std::vector<ManifestEntry> out;
  auto add = [&](const BirationalMap& m, const char* kind) {
    out.push_back({m.id, kind, m.forward.size(), m.has_inverse(), m.moves_times(), m.alternative, m.note});
  };
  const Atlas& a = atlas();
  for (const auto& key : registry_keys()) {
    if (auto it = a.charts.find(key); it != a.charts.end())
      for (const auto& m : it->second) add(m, "chart");
    if (auto it = a.symmetries.find(key); it != a.symmetries.end())
      for (const auto& m : it->second) add(m, "symmetry");
  }
  for (const auto& c : a.conjugacies) add(c.map, "map");
  for (const auto& m : a.steps) add(m, "map");
  for (const auto& d : a.schemes) add(d.map, "degeneration");
  return out;
}

}  // namespace garnier
