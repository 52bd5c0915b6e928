#include "garnier/rational.hpp"

#include <cctype>

#include "garnier/gcd.hpp"

namespace garnier {

namespace {

Polynomial exact(const Polynomial& num, const Polynomial& den) {
  auto q = num.exact_div(den);
  if (!q) throw std::logic_error("rational: expected exact division failed");
  return std::move(*q);
}

// Makes the denominator monic.
void normalize_lc(Polynomial& num, Polynomial& den) {
  const FieldElement& lc = den.leading_term().coef;
  if (lc.is_one()) return;
  const FieldElement inv = lc.inverse();
  num = num.scaled(inv);
  den = den.scaled(inv);
}

}  // namespace

RationalFunction RationalFunction::fraction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw ZeroDivision("rational function with zero denominator");
  if (num.is_zero()) return {};
  if (den.is_constant()) return num.scaled(den.leading_term().coef.inverse());
  const Polynomial g = gcd(num, den);
  if (!g.is_constant()) {
    num = exact(num, g);
    den = exact(den, g);
  }
  normalize_lc(num, den);
  return {std::move(num), std::move(den), 0};
}

RationalFunction RationalFunction::operator-() const { return {-num_, den_, 0}; }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    Polynomial n = a.num_ + b.num_;
    if (a.den_.is_constant() || n.is_zero()) return n;
    const Polynomial g = gcd(n, a.den_);
    if (g.is_constant()) return {std::move(n), a.den_, 0};
    return {exact(n, g), exact(a.den_, g), 0};
  }
  const Polynomial g = gcd(a.den_, b.den_);
  if (g.is_constant()) return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, 0};
  const Polynomial bd = exact(a.den_, g);
  const Polynomial dd = exact(b.den_, g);
  Polynomial t = a.num_ * dd + b.num_ * bd;
  if (t.is_zero()) return {};
  const Polynomial g2 = gcd(t, g);
  if (g2.is_constant()) return {std::move(t), bd * b.den_, 0};
  return {exact(t, g2), bd * exact(b.den_, g2), 0};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) return a.num_ * b.num_;
  const Polynomial g1 = gcd(a.num_, b.den_);
  const Polynomial g2 = gcd(b.num_, a.den_);
  const bool t1 = g1.is_constant(), t2 = g2.is_constant();
  Polynomial n = (t1 ? a.num_ : exact(a.num_, g1)) * (t2 ? b.num_ : exact(b.num_, g2));
  Polynomial d = (t2 ? a.den_ : exact(a.den_, g2)) * (t1 ? b.den_ : exact(b.den_, g1));
  return {std::move(n), std::move(d), 0};
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw ZeroDivision("division by zero rational function");
  Polynomial n = den_, d = num_;
  normalize_lc(n, d);
  return {std::move(n), std::move(d), 0};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  const auto u = static_cast<unsigned>(e);
  return {num_.pow(u), den_.pow(u), 0};
}

RationalFunction RationalFunction::derivative(Var v) const {
  if (is_polynomial()) return num_.derivative(v);
  if (!den_.depends_on(v)) return fraction(num_.derivative(v), den_);
  // (n/d)' = (n' d - n d') / d^2; any cancellation divides d.
  Polynomial n = num_.derivative(v) * den_ - num_ * den_.derivative(v);
  Polynomial d = den_ * den_;
  if (n.is_zero()) return {};
  for (;;) {
    const Polynomial g = gcd(n, den_);
    if (g.is_constant()) break;
    n = exact(n, g);
    d = exact(d, g);
  }
  return {std::move(n), std::move(d), 0};
}

std::string RationalFunction::to_canonical() const {
  if (is_polynomial()) return num_.to_canonical();
  return '(' + num_.to_canonical() + ")/(" + den_.to_canonical() + ')';
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return '(' + num_.to_string() + ")/(" + den_.to_string() + ')';
}

RationalFunction substitute(const Polynomial& p, const Bindings& bindings) {
  VarSet bound;
  std::vector<int> slot(kMaxVars, -1);
  for (std::size_t k = 0; k < bindings.size(); ++k) {
    const Var v = bindings[k].first;
    if (p.depends_on(v)) {
      bound.set(v.id());
      slot[v.id()] = static_cast<int>(k);
    }
  }
  if (bound.none()) return p;

  // Distinct non-trivial denominators and the variables they belong to.
  std::vector<Polynomial> dens;
  std::vector<int> den_of(kMaxVars, -1);
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (!bound.test(i)) continue;
    const Polynomial& d = bindings[slot[i]].second.den();
    if (d.is_constant()) continue;
    std::size_t k = 0;
    while (k < dens.size() && dens[k] != d) ++k;
    if (k == dens.size()) dens.push_back(d);
    den_of[i] = static_cast<int>(k);
  }

  const auto parts = p.split_wrt(bound);
  std::vector<unsigned> top(dens.size(), 0);
  for (const auto& [mono, coef] : parts) {
    std::vector<unsigned> e(dens.size(), 0);
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (den_of[i] >= 0) e[den_of[i]] += mono.exponent(i);
    for (std::size_t k = 0; k < dens.size(); ++k) top[k] = std::max(top[k], e[k]);
  }

  std::vector<std::vector<Polynomial>> num_pow(kMaxVars);
  std::vector<std::vector<Polynomial>> den_pow(dens.size());
  const auto power = [](std::vector<Polynomial>& cache, const Polynomial& base, unsigned e) -> const Polynomial& {
    if (cache.empty()) cache.emplace_back(1);
    while (cache.size() <= e) cache.push_back(cache.back() * base);
    return cache[e];
  };

  std::vector<Term> acc;
  for (const auto& [mono, coef] : parts) {
    Polynomial prod = coef;
    std::vector<unsigned> e(dens.size(), 0);
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      const unsigned ei = mono.exponent(i);
      if (ei == 0) continue;
      prod = prod * power(num_pow[i], bindings[slot[i]].second.num(), ei);
      if (den_of[i] >= 0) e[den_of[i]] += ei;
    }
    for (std::size_t k = 0; k < dens.size(); ++k)
      if (top[k] > e[k]) prod = prod * power(den_pow[k], dens[k], top[k] - e[k]);
    acc.insert(acc.end(), prod.terms().begin(), prod.terms().end());
  }
  Polynomial num = Polynomial::from_terms(std::move(acc));
  if (dens.empty() || num.is_zero()) return num;

  Polynomial den(1);
  for (std::size_t k = 0; k < dens.size(); ++k) {
    while (top[k] > 0) {
      auto q = num.exact_div(dens[k]);
      if (!q) break;
      num = std::move(*q);
      --top[k];
    }
    if (top[k] > 0) den = den * power(den_pow[k], dens[k], top[k]);
  }
  // Remaining common factors divide some dens[k]; gcd against the small
  // factors instead of their product.
  for (std::size_t k = 0; k < dens.size() && !den.is_constant(); ++k) {
    if (top[k] == 0) continue;
    for (;;) {
      // Denominators may share factors, so bound g by what is left of den.
      Polynomial g = gcd(num, dens[k]);
      if (!g.is_constant()) g = gcd(g, den);
      if (g.is_constant()) break;
      num = exact(num, g);
      den = exact(den, g);
    }
  }
  // Binding denominators are monic, hence so is den.
  return {std::move(num), std::move(den), 0};
}

RationalFunction substitute(const RationalFunction& f, const Bindings& bindings) {
  const RationalFunction n = substitute(f.num(), bindings);
  if (f.is_polynomial()) return n;
  const RationalFunction d = substitute(f.den(), bindings);
  if (d.is_zero()) throw ZeroDivision("substitution makes the denominator zero");
  return n / d;
}

RationalFunction limit_epsilon_zero(const RationalFunction& f, Var eps) {
  if (eps.kind() != VarKind::epsilon)
    throw std::invalid_argument("limit variable '" + std::string(eps.name()) + "' is not of epsilon kind");
  Polynomial d0 = f.den().evaluate(eps, 0);
  if (d0.is_zero()) throw PoleAtZero("pole at " + std::string(eps.name()) + "=0");
  return RationalFunction::fraction(f.num().evaluate(eps, 0), std::move(d0));
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RationalFunction run() {
    RationalFunction r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  // Polynomial summands are merged in one pass to keep long sums linear.
  RationalFunction expr() {
    std::vector<Term> poly;
    RationalFunction rest;
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    for (;;) {
      RationalFunction t = term();
      if (negate) t = -t;
      if (t.is_polynomial())
        poly.insert(poly.end(), t.num().terms().begin(), t.num().terms().end());
      else
        rest += t;
      if (eat('+'))
        negate = false;
      else if (eat('-'))
        negate = true;
      else
        break;
    }
    return rest + RationalFunction(Polynomial::from_terms(std::move(poly)));
  }

  RationalFunction term() {
    RationalFunction r = unary();
    for (;;) {
      if (eat('*'))
        r *= unary();
      else if (eat('/'))
        r /= unary();
      else
        return r;
    }
  }

  RationalFunction unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (!eat('^')) return base;
    bool paren = eat('(');
    const bool neg = eat('-');
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    const int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (paren && !eat(')')) fail("expected ')'");
    return base.pow(neg ? -e : e);
  }

  RationalFunction atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return FieldElement(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string_view name = s_.substr(start, pos_ - start);
      if (name == "i") return FieldElement::imaginary_unit();
      if (name == "r2") return FieldElement::sqrt2();
      const auto v = Var::find(name);
      if (!v) {
        pos_ = start;
        fail("unknown symbol '" + std::string(name) + "'");
      }
      return RationalFunction::variable(*v);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse(std::string_view text) { return Parser(text).run(); }

}  // namespace garnier
