#include "garnier/polynomial.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace garnier {

namespace {

bool term_greater(const Term& a, const Term& b) { return a.mono > b.mono; }

// Merge two canonical term lists, adding (or subtracting) coefficients.
std::vector<Term> merge(std::span<const Term> a, std::span<const Term> b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(subtract ? Term{b[j].mono, -b[j].coef} : b[j]);
      ++j;
    } else {
      FieldElement s = subtract ? a[i].coef - b[j].coef : a[i].coef + b[j].coef;
      if (!s.is_zero()) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(subtract ? Term{b[j].mono, -b[j].coef} : b[j]);
  return out;
}

struct HeapEntry {
  Monomial mono;
  std::uint32_t i;
  std::uint32_t j;
};
struct HeapLess {
  bool operator()(const HeapEntry& a, const HeapEntry& b) const { return a.mono < b.mono; }
};

}  // namespace

Polynomial::Polynomial(const FieldElement& c) {
  if (!c.is_zero()) terms_.push_back({Monomial(), c});
}

Polynomial Polynomial::variable(Var v, unsigned e) { return monomial(Monomial::of(v, e), 1); }

Polynomial Polynomial::monomial(const Monomial& m, FieldElement c) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
  return p;
}

Polynomial Polynomial::from_sorted(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
      if (out.back().coef.is_zero()) out.pop_back();
    } else if (!t.coef.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  return from_sorted(std::move(out));
}

FieldElement Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return FieldElement();
}

VarSet Polynomial::support() const {
  VarSet s;
  for (const auto& t : terms_) s |= t.mono.support();
  return s;
}

bool Polynomial::depends_on(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono[v] != 0; });
}

unsigned Polynomial::degree(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[v]);
  return d;
}

unsigned Polynomial::degree_in(const VarSet& vars) const {
  if (is_zero()) throw std::domain_error("degree of the zero polynomial is undefined");
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree_in(vars));
  return d;
}

unsigned Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().mono.degree();
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  return Polynomial::from_sorted(merge(a.terms_, b.terms_, false));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return Polynomial::from_sorted(merge(a.terms_, b.terms_, true));
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  if (c.is_zero()) return {};
  if (c.is_one()) return *this;
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const FieldElement& c) const {
  if (c.is_zero()) return {};
  Polynomial r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
  return r;
}

// Johnson's heap multiplication: the heap holds one cursor per row of the
// shorter operand, so products come out in decreasing order.
Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.times_monomial(a.terms_[0].mono, a.terms_[0].coef);
  if (b.size() == 1) return a.times_monomial(b.terms_[0].mono, b.terms_[0].coef);
  const auto& rows = a.size() <= b.size() ? a.terms_ : b.terms_;
  const auto& cols = a.size() <= b.size() ? b.terms_ : a.terms_;

  std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapLess> heap;
  for (std::uint32_t i = 0; i < rows.size(); ++i)
    heap.push({rows[i].mono * cols[0].mono, i, 0});

  std::vector<Term> out;
  mpq_class scratch;
  while (!heap.empty()) {
    const Monomial m = heap.top().mono;
    FieldElement acc;
    while (!heap.empty() && heap.top().mono == m) {
      HeapEntry e = heap.top();
      heap.pop();
      acc.add_mul(rows[e.i].coef, cols[e.j].coef, scratch);
      if (e.j + 1 < cols.size()) heap.push({rows[e.i].mono * cols[e.j + 1].mono, e.i, e.j + 1});
    }
    if (!acc.is_zero()) out.push_back({m, std::move(acc)});
  }
  return Polynomial::from_sorted(std::move(out));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

// Heap-based exact division; fails as soon as a leading monomial of the
// running remainder is not divisible by lt(d).
std::optional<Polynomial> Polynomial::exact_div(const Polynomial& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (is_zero()) return Polynomial();
  if (d.is_constant()) return scaled(d.terms_[0].coef.inverse());
  const Term& lt = d.terms_.front();
  if (!lt.mono.divides(terms_.front().mono)) return std::nullopt;
  if (!d.terms_.back().mono.divides(terms_.back().mono)) return std::nullopt;
  if (d.size() == 1) {
    for (const auto& t : terms_)
      if (!lt.mono.divides(t.mono)) return std::nullopt;
    const FieldElement inv = lt.coef.inverse();
    Polynomial q;
    q.terms_.reserve(terms_.size());
    for (const auto& t : terms_) q.terms_.push_back({t.mono / lt.mono, t.coef * inv});
    return q;
  }
  const FieldElement lt_inv = lt.coef.inverse();
  std::vector<Term> quot;
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapLess> heap;
  std::size_t k = 0;
  mpq_class scratch;
  while (k < terms_.size() || !heap.empty()) {
    Monomial m;
    if (heap.empty() || (k < terms_.size() && terms_[k].mono > heap.top().mono))
      m = terms_[k].mono;
    else
      m = heap.top().mono;
    FieldElement acc;
    if (k < terms_.size() && terms_[k].mono == m) acc = terms_[k++].coef;
    while (!heap.empty() && heap.top().mono == m) {
      HeapEntry e = heap.top();
      heap.pop();
      acc.add_mul(quot[e.i].coef, d.terms_[e.j].coef, scratch, true);
      if (e.j + 1 < d.terms_.size())
        heap.push({quot[e.i].mono * d.terms_[e.j + 1].mono, e.i, e.j + 1});
    }
    if (acc.is_zero()) continue;
    if (!lt.mono.divides(m)) return std::nullopt;
    quot.push_back({m / lt.mono, acc * lt_inv});
    heap.push({quot.back().mono * d.terms_[1].mono, static_cast<std::uint32_t>(quot.size() - 1), 1});
  }
  return from_sorted(std::move(quot));
}

Polynomial Polynomial::div_monomial(const Monomial& m) const {
  if (m.is_one()) return *this;
  Polynomial r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono / m, t.coef});
  return r;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.front().mono;
  for (const auto& t : terms_) {
    g = Monomial::gcd(g, t.mono);
    if (g.is_one()) break;
  }
  return g;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || terms_.front().coef.is_one()) return *this;
  return scaled(terms_.front().coef.inverse());
}

Polynomial Polynomial::derivative(Var v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const unsigned e = t.mono[v];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(v, e - 1);
    out.push_back({m, t.coef * FieldElement(static_cast<long>(e))});
  }
  // dividing by a common monomial preserves the order
  return from_sorted(std::move(out));
}

std::vector<Polynomial> Polynomial::coefficients_in(Var v) const {
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    const unsigned e = m[v];
    m.set(v, 0);
    buckets[e].push_back({m, t.coef});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

Polynomial Polynomial::from_coefficients(std::span<const Polynomial> coeffs, Var v) {
  std::vector<Term> all;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (const auto& t : coeffs[k].terms_) {
      Monomial m = t.mono;
      m.set(v, static_cast<unsigned>(k));
      all.push_back({m, t.coef});
    }
  return from_terms(std::move(all));
}

std::vector<std::pair<Monomial, Polynomial>> Polynomial::split_wrt(const VarSet& vars) const {
  const VarSet others = ~vars;
  std::unordered_map<Monomial, std::vector<Term>, MonomialHash> groups;
  std::vector<Monomial> order;
  for (const auto& t : terms_) {
    Monomial key = t.mono.restrict_to(vars);
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) order.push_back(key);
    it->second.push_back({t.mono.restrict_to(others), t.coef});
  }
  std::vector<std::pair<Monomial, Polynomial>> out;
  out.reserve(order.size());
  for (const auto& key : order) out.emplace_back(key, from_terms(std::move(groups[key])));
  return out;
}

std::vector<Polynomial> Polynomial::coefficients_wrt(const VarSet& vars) const {
  std::vector<Polynomial> out;
  for (auto& [m, c] : split_wrt(vars)) out.push_back(std::move(c));
  return out;
}

Polynomial Polynomial::evaluate(Var v, const FieldElement& value) const {
  if (!depends_on(v)) return *this;
  const unsigned deg = degree(v);
  std::vector<FieldElement> powers(deg + 1);
  powers[0] = FieldElement(1);
  for (unsigned k = 1; k <= deg; ++k) powers[k] = powers[k - 1] * value;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    const unsigned e = t.mono[v];
    if (e == 0) {
      out.push_back(t);
      continue;
    }
    Monomial m = t.mono;
    m.set(v, 0);
    out.push_back({m, t.coef * powers[e]});
  }
  return from_terms(std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].mono != b.terms_[k].mono || a.terms_[k].coef != b.terms_[k].coef) return false;
  return true;
}

std::string Polynomial::to_canonical() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k != 0) out += " + ";
    out += '(' + terms_[k].coef.to_canonical() + ')';
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      const unsigned e = terms_[k].mono.exponent(i);
      if (e == 0) continue;
      out += '*';
      out += kUniverse[i].name;
      out += '^' + std::to_string(e);
    }
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    std::string coef = t.coef.to_string();
    const bool compound = !t.coef.is_rational() && coef.find_first_of("+-", 1) != std::string::npos;
    if (compound) coef = '(' + coef + ')';
    bool negative = coef[0] == '-';
    if (negative) coef.erase(0, 1);
    if (k == 0)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string mono;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      const unsigned e = t.mono.exponent(i);
      if (e == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += kUniverse[i].name;
      if (e > 1) mono += '^' + std::to_string(e);
    }
    if (mono.empty())
      out += coef;
    else if (coef == "1")
      out += mono;
    else
      out += coef + '*' + mono;
  }
  return out;
}

}  // namespace garnier
