#include "garnier/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace garnier {

NumericState NumericState::zero(const HamiltonianSystem& sys) {
  NumericState s;
  s.time_vars = sys.times;
  s.phase_vars = sys.phase_vars();
  s.param_vars = sys.params;
  s.times.assign(s.time_vars.size(), 0.0);
  s.phase.assign(s.phase_vars.size(), 0.0);
  s.params.assign(s.param_vars.size(), 0.0);
  return s;
}

namespace {

template <typename Fn>
bool visit_slot(std::vector<Var>& vars, std::vector<double>& vals, Var v, Fn&& fn) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == v) {
      fn(vals[i]);
      return true;
    }
  return false;
}

using Point = std::array<double, kMaxVars>;

VarSet fill_point(const NumericState& s, Point& pt) {
  VarSet present;
  auto put = [&](const std::vector<Var>& vars, const std::vector<double>& vals) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      pt[vars[i].id()] = vals[i];
      present.set(vars[i].id());
    }
  };
  put(s.time_vars, s.times);
  put(s.phase_vars, s.phase);
  put(s.param_vars, s.params);
  return present;
}

}  // namespace

double NumericState::get(Var v) const {
  const std::pair<const std::vector<Var>*, const std::vector<double>*> groups[] = {
      {&time_vars, &times}, {&phase_vars, &phase}, {&param_vars, &params}};
  for (const auto& [vars, vals] : groups)
    for (std::size_t i = 0; i < vars->size(); ++i)
      if ((*vars)[i] == v) return (*vals)[i];
  throw std::out_of_range("numeric state has no value for " + std::string(v.name()));
}

void NumericState::set(Var v, double value) {
  auto write = [&](double& x) { x = value; };
  if (visit_slot(time_vars, times, v, write) || visit_slot(phase_vars, phase, v, write) ||
      visit_slot(param_vars, params, v, write))
    return;
  throw std::out_of_range("numeric state has no slot for " + std::string(v.name()));
}

bool NumericState::matches(const HamiltonianSystem& sys) const {
  return time_vars == sys.times && phase_vars == sys.phase_vars() && param_vars == sys.params &&
         times.size() == time_vars.size() && phase.size() == phase_vars.size() && params.size() == param_vars.size();
}

void require_constraint(const HamiltonianSystem& sys, const NumericState& s, double tol) {
  if (!sys.constraint) return;
  const double r = evaluate(RationalFunction(sys.constraint->relation), s);
  if (std::abs(r) > tol) {
    std::ostringstream msg;
    msg << "parameters violate " << sys.constraint->text << " (residual " << r << ")";
    throw std::invalid_argument(msg.str());
  }
}

// Leaf when var < 0; otherwise sum_k coeffs[k] * var^k.
struct CompiledRational::Node {
  int var = -1;
  std::complex<double> c;
  std::vector<Node> coeffs;
};

namespace {

template <typename N>
N compile_node(const Polynomial& p, bool& complex) {
  N n;
  if (p.is_constant()) {
    const FieldElement c = p.constant_term();
    if (!c.is_real()) complex = true;
    n.c = c.to_complex();
    return n;
  }
  const VarSet sup = p.support();
  std::size_t v = 0;
  while (!sup.test(v)) ++v;
  n.var = static_cast<int>(v);
  for (const Polynomial& k : p.coefficients_in(Var(static_cast<std::uint8_t>(v))))
    n.coeffs.push_back(compile_node<N>(k, complex));
  return n;
}

template <typename T, typename N>
T horner(const N& n, const double* pt) {
  if (n.var < 0) {
    if constexpr (std::is_same_v<T, double>)
      return n.c.real();
    else
      return n.c;
  }
  const double x = pt[static_cast<std::size_t>(n.var)];
  T acc = horner<T>(n.coeffs.back(), pt);
  for (std::size_t k = n.coeffs.size() - 1; k-- > 0;) acc = acc * x + horner<T>(n.coeffs[k], pt);
  return acc;
}

}  // namespace

CompiledRational::CompiledRational(const RationalFunction& f) : den_text_(f.den().to_string()), support_(f.support()) {
  num_ = std::make_unique<Node>(compile_node<Node>(f.num(), complex_));
  den_ = std::make_unique<Node>(compile_node<Node>(f.den(), complex_));
}

CompiledRational::CompiledRational(const CompiledRational& o)
    : num_(std::make_unique<Node>(*o.num_)),
      den_(std::make_unique<Node>(*o.den_)),
      den_text_(o.den_text_),
      complex_(o.complex_),
      support_(o.support_) {}
CompiledRational::CompiledRational(CompiledRational&&) noexcept = default;
CompiledRational& CompiledRational::operator=(CompiledRational o) noexcept {
  std::swap(num_, o.num_);
  std::swap(den_, o.den_);
  std::swap(den_text_, o.den_text_);
  std::swap(complex_, o.complex_);
  std::swap(support_, o.support_);
  return *this;
}
CompiledRational::~CompiledRational() = default;

namespace {

void require_support(const VarSet& needed, const VarSet& present) {
  const VarSet missing = needed & ~present;
  if (missing.none()) return;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (missing.test(i))
      throw std::out_of_range("numeric state has no value for " +
                              std::string(Var(static_cast<std::uint8_t>(i)).name()));
}

}  // namespace

double CompiledRational::operator()(const NumericState& s) const {
  if (complex_) throw std::domain_error("expression has non-real coefficients");
  Point pt{};
  require_support(support_, fill_point(s, pt));
  return value_at(pt.data());
}

double CompiledRational::value_at(const double* point) const {
  const double d = horner<double>(*den_, point);
  if (!(std::abs(d) > kSingularityGuard)) {
    std::ostringstream msg;
    msg << "near-singular denominator " << den_text_ << " = " << d;
    throw NearSingular(msg.str());
  }
  return horner<double>(*num_, point) / d;
}

std::complex<double> CompiledRational::complex_value(const NumericState& s) const {
  Point pt{};
  require_support(support_, fill_point(s, pt));
  const std::complex<double> d = horner<std::complex<double>>(*den_, pt.data());
  if (!(std::abs(d) > kSingularityGuard)) {
    std::ostringstream msg;
    msg << "near-singular denominator " << den_text_ << " = " << std::abs(d);
    throw NearSingular(msg.str());
  }
  return horner<std::complex<double>>(*num_, pt.data()) / d;
}

double evaluate(const RationalFunction& f, const NumericState& at) { return CompiledRational(f)(at); }

Trajectory integrate_flow(const HamiltonianSystem& sys, std::size_t time_index, const NumericState& from,
                          double to_time, double step) {
  if (!(step > 0) || !std::isfinite(step)) throw std::invalid_argument("integrate_flow: step must be positive");
  if (time_index >= sys.times.size()) throw std::invalid_argument("integrate_flow: no such time");
  if (!from.matches(sys)) throw std::invalid_argument("integrate_flow: state does not fit " + sys.name);

  std::vector<CompiledRational> field;
  for (const RationalFunction& c : vector_field(sys, time_index)) {
    field.emplace_back(c);
    if (field.back().is_complex())
      throw std::invalid_argument("integrate_flow: " + sys.name + " has complex coefficients");
  }

  Trajectory traj;
  traj.states.push_back(from);
  const double t0 = from.times[time_index];
  const double span = to_time - t0;
  const auto n = static_cast<std::size_t>(std::ceil(std::abs(span) / step - 1e-9));
  if (n == 0) return traj;
  const double h = span / static_cast<double>(n);
  const std::size_t dim = field.size();

  Point pt{};
  fill_point(from, pt);
  std::vector<std::size_t> slot(dim);
  for (std::size_t i = 0; i < dim; ++i) slot[i] = from.phase_vars[i].id();
  const std::size_t tslot = sys.times[time_index].id();

  std::vector<double> y = from.phase, k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);
  auto rhs = [&](double t, const std::vector<double>& at, std::vector<double>& out) {
    pt[tslot] = t;
    for (std::size_t i = 0; i < dim; ++i) pt[slot[i]] = at[i];
    for (std::size_t i = 0; i < dim; ++i) {
      out[i] = field[i].value_at(pt.data());
      if (!std::isfinite(out[i])) throw NearSingular("non-finite field component " + std::to_string(i + 1));
    }
  };

  for (std::size_t k = 0; k < n; ++k) {
    const double t = t0 + h * static_cast<double>(k);
    try {
      rhs(t, y, k1);
      for (std::size_t i = 0; i < dim; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
      rhs(t + 0.5 * h, tmp, k2);
      for (std::size_t i = 0; i < dim; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
      rhs(t + 0.5 * h, tmp, k3);
      for (std::size_t i = 0; i < dim; ++i) tmp[i] = y[i] + h * k3[i];
      rhs(t + h, tmp, k4);
    } catch (const NearSingular& e) {
      traj.aborted = true;
      std::ostringstream msg;
      msg << "singularity at " << sys.times[time_index].name() << " = " << t << ": " << e.what();
      traj.message = msg.str();
      return traj;
    }
    for (std::size_t i = 0; i < dim; ++i) y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    NumericState next = traj.states.back();
    next.phase = y;
    next.times[time_index] = k + 1 == n ? to_time : t0 + h * static_cast<double>(k + 1);
    traj.states.push_back(std::move(next));
  }
  return traj;
}

std::vector<NamedIntegral> registered_integrals(const HamiltonianSystem& sys) {
  std::vector<NamedIntegral> out;
  for (const RationalFunction& h : sys.hamiltonians)
    for (Var t : sys.times)
      if (h.depends_on(t)) return {};
  for (std::size_t i = 0; i < sys.hamiltonians.size(); ++i)
    out.push_back({"H" + std::to_string(i + 1), sys.hamiltonians[i]});
  return out;
}

std::vector<double> drift_report(const std::vector<NamedIntegral>& integrals, const Trajectory& traj) {
  if (traj.states.empty()) throw std::invalid_argument("drift_report: empty trajectory");
  std::vector<double> out;
  for (const NamedIntegral& in : integrals) {
    const CompiledRational f(in.f);
    const double f0 = f(traj.states.front());
    double worst = 0;
    for (const NumericState& s : traj.states) worst = std::max(worst, std::abs(f(s) - f0));
    out.push_back(worst);
  }
  return out;
}

void write_csv(std::ostream& out, const Trajectory& traj, const std::vector<NamedIntegral>& integrals) {
  if (traj.states.empty()) return;
  const NumericState& first = traj.states.front();
  std::vector<std::string> header;
  for (Var v : first.time_vars) header.emplace_back(v.name());
  for (Var v : first.phase_vars) header.emplace_back(v.name());
  for (const NamedIntegral& in : integrals) header.push_back(in.name);
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';

  std::vector<CompiledRational> fs;
  for (const NamedIntegral& in : integrals) fs.emplace_back(in.f);
  const auto old = out.precision(17);
  for (const NumericState& s : traj.states) {
    bool lead = true;
    auto cell = [&](double v) {
      out << (lead ? "" : ",") << v;
      lead = false;
    };
    for (double v : s.times) cell(v);
    for (double v : s.phase) cell(v);
    for (const CompiledRational& f : fs) cell(f(s));
    out << '\n';
  }
  out.precision(old);
}

NumericState autog14_benchmark_start() {
  NumericState s = NumericState::zero(registry_get("autoG14"));
  for (double& v : s.phase) v = 1.0;
  s.set(Var::named("a0"), 0.25);
  s.set(Var::named("a1"), -0.5);
  s.set(Var::named("a2"), 0.25);
  return s;
}

namespace {

double max_gap(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

Benchmark autog14_benchmark(const NumericState& start, double horizon, double step, double reference_step) {
  const HamiltonianSystem& sys = registry_get("autoG14");
  const auto integrals = registered_integrals(sys);
  const double t_end = start.times[0] + horizon;
  const double s_end = start.times[1] + horizon;

  Benchmark b;
  b.horizon = horizon;
  b.step = step;
  b.reference_step = reference_step;
  auto note = [&b](const Trajectory& tr) {
    if (tr.aborted && !b.aborted) b.message = tr.message;
    b.aborted = b.aborted || tr.aborted;
    return tr;
  };
  const Trajectory run = note(integrate_flow(sys, 0, start, t_end, step));
  const Trajectory half = note(integrate_flow(sys, 0, start, t_end, step / 2));
  const Trajectory ref = note(integrate_flow(sys, 0, start, t_end, reference_step));
  b.drift = drift_report(integrals, run);
  b.drift_half = drift_report(integrals, half);
  b.reference_drift = drift_report(integrals, ref);
  b.halving_ratio = b.drift_half[0] > 0 ? b.drift[0] / b.drift_half[0] : 0;
  b.endpoint_error = max_gap(run.last().phase, ref.last().phase);

  const Trajectory ts = note(integrate_flow(sys, 1, run.last(), s_end, step));
  const Trajectory s_first = note(integrate_flow(sys, 1, start, s_end, step));
  const Trajectory st = note(integrate_flow(sys, 0, s_first.last(), t_end, step));
  b.commutation = max_gap(ts.last().phase, st.last().phase);
  return b;
}

}  // namespace garnier
