#include "garnier/gcd.hpp"

#include <algorithm>
#include <random>

#include "garnier/modular.hpp"

namespace garnier {

namespace {

using modular::kPrime;
using UPoly = std::vector<Polynomial>;  // dense in the main variable
using ModPoly = std::vector<std::uint64_t>;

Polynomial gcd_nonzero(const Polynomial& a, const Polynomial& b);

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

void trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool by_size(const Polynomial& l, const Polynomial& r) { return l.size() < r.size(); }

Polynomial fold_gcd(std::vector<Polynomial> polys) {
  polys.erase(std::remove_if(polys.begin(), polys.end(), [](const Polynomial& p) { return p.is_zero(); }),
              polys.end());
  if (polys.empty()) return {};
  std::sort(polys.begin(), polys.end(), by_size);
  Polynomial g = polys.front().monic();
  for (std::size_t k = 1; k < polys.size() && !g.is_constant(); ++k) g = gcd_nonzero(g, polys[k]);
  return g.is_constant() ? Polynomial(1) : g;
}

// Evaluates every variable except `v` at `point` (mod p) and returns the
// image as a dense univariate polynomial in v.
bool image(const Polynomial& f, Var v, const std::array<std::uint64_t, kMaxVars>& point, ModPoly& out) {
  out.assign(f.degree(v) + 1, 0);
  for (const auto& t : f.terms()) {
    std::uint64_t c = 0;
    if (!t.coef.reduce_mod(kPrime, modular::kSqrtMinusOne, modular::kSqrtTwo, c)) return false;
    for (std::size_t i = 0; i < kMaxVars && c != 0; ++i) {
      const unsigned e = t.mono.exponent(i);
      if (e == 0 || i == v.id()) continue;
      c = modular::mul(c, modular::pow(point[i], e, kPrime), kPrime);
    }
    auto& slot = out[t.mono[v]];
    slot = modular::add(slot, c, kPrime);
  }
  return true;
}

std::size_t mod_gcd_degree(ModPoly a, ModPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a <- a mod b
    const std::uint64_t inv = modular::inv(b.back(), kPrime);
    while (a.size() >= b.size()) {
      const std::uint64_t f = modular::mul(a.back(), inv, kPrime);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k)
        a[k + shift] = modular::sub(a[k + shift], modular::mul(f, b[k], kPrime), kPrime);
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

UPoly to_upoly(const Polynomial& p, Var v) { return p.coefficients_in(v); }

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
UPoly prem(UPoly a, const UPoly& b) {
  const std::size_t n = b.size() - 1;
  const Polynomial& lcb = b.back();
  long missing = static_cast<long>(a.size()) - static_cast<long>(n);  // deg a - deg b + 1
  while (!a.empty() && a.size() - 1 >= n) {
    const std::size_t d = a.size() - 1;
    const Polynomial c = a.back();
    for (auto& coef : a) coef = coef * lcb;
    for (std::size_t k = 0; k <= n; ++k) a[k + d - n] -= c * b[k];
    trim(a);
    --missing;
  }
  if (missing > 0) {
    const Polynomial f = lcb.pow(static_cast<unsigned>(missing));
    for (auto& coef : a) coef = coef * f;
  }
  return a;
}

Polynomial exact(const Polynomial& num, const Polynomial& den) {
  auto q = num.exact_div(den);
  if (!q) throw std::logic_error("gcd: expected exact division failed");
  return std::move(*q);
}

Polynomial upoly_content(const UPoly& p) { return fold_gcd(p); }

// Subresultant PRS on primitive inputs; returns the primitive gcd.
Polynomial subresultant_gcd(UPoly a, UPoly b, Var v) {
  if (a.size() < b.size()) std::swap(a, b);
  Polynomial g(1), h(1);
  for (;;) {
    const std::size_t delta = a.size() - b.size();
    UPoly r = prem(a, b);
    if (r.empty()) break;
    if (r.size() == 1) return Polynomial(1);
    a = std::move(b);
    const Polynomial divisor = g * h.pow(static_cast<unsigned>(delta));
    for (auto& c : r) c = exact(c, divisor);
    b = std::move(r);
    g = a.back();
    if (delta == 1)
      h = g;
    else if (delta > 1)
      h = exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
  }
  const Polynomial c = upoly_content(b);
  for (auto& coef : b) coef = exact(coef, c);
  return Polynomial::from_coefficients(b, v);
}

bool degrees_fit(const Polynomial& small, const Polynomial& big, const VarSet& vars) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (vars.test(i)) {
      const Var v(static_cast<std::uint8_t>(i));
      if (small.degree(v) > big.degree(v)) return false;
    }
  return true;
}

Polynomial primitive_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a.size() == b.size() && a.monic() == b.monic()) return a.monic();

  const VarSet sa = a.support();
  const VarSet sb = b.support();
  if (sa != sb) {
    const VarSet only_a = sa & ~sb;
    const VarSet only_b = sb & ~sa;
    std::vector<Polynomial> parts = only_a.any() ? a.coefficients_wrt(only_a) : std::vector{a};
    std::vector<Polynomial> more = only_b.any() ? b.coefficients_wrt(only_b) : std::vector{b};
    parts.insert(parts.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    return fold_gcd(std::move(parts));
  }

  if (b.size() <= a.size() && degrees_fit(b, a, sa)) {
    if (a.exact_div(b)) return b.monic();
  } else if (a.size() < b.size() && degrees_fit(a, b, sa)) {
    if (b.exact_div(a)) return a.monic();
  }

  // Main variable: lowest degree in the smaller of the two degrees.
  Var main;
  unsigned best_lo = ~0U, best_hi = ~0U;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (!sa.test(i)) continue;
    const Var v(static_cast<std::uint8_t>(i));
    const unsigned da = a.degree(v), db = b.degree(v);
    const unsigned lo = std::min(da, db), hi = std::max(da, db);
    if (lo < best_lo || (lo == best_lo && hi < best_hi)) {
      best_lo = lo;
      best_hi = hi;
      main = v;
    }
  }

  UPoly ua = to_upoly(a, main);
  UPoly ub = to_upoly(b, main);
  if (gcd_degree_bound(a, b, main) == 0) {
    std::vector<Polynomial> parts = ua;
    parts.insert(parts.end(), ub.begin(), ub.end());
    return fold_gcd(std::move(parts));
  }

  const Polynomial ca = upoly_content(ua);
  const Polynomial cb = upoly_content(ub);
  const Polynomial c = gcd(ca, cb);
  if (!ca.is_constant())
    for (auto& coef : ua) coef = exact(coef, ca);
  if (!cb.is_constant())
    for (auto& coef : ub) coef = exact(coef, cb);
  const Polynomial g = subresultant_gcd(std::move(ua), std::move(ub), main);
  return (c * g).monic();
}

Polynomial gcd_nonzero(const Polynomial& a, const Polynomial& b) {
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  const Monomial ma = a.monomial_content();
  const Monomial mb = b.monomial_content();
  const Monomial mg = Monomial::gcd(ma, mb);
  const Polynomial g = primitive_gcd(a.div_monomial(ma), b.div_monomial(mb));
  return g.times_monomial(mg, 1).monic();
}

}  // namespace

int gcd_degree_bound(const Polynomial& a, const Polynomial& b, Var v) {
  std::mt19937_64 rng(0x5eed0000ULL + v.id());
  std::uniform_int_distribution<std::uint64_t> dist(2, kPrime - 1);
  std::array<std::uint64_t, kMaxVars> point{};
  const std::size_t da = a.degree(v), db = b.degree(v);
  for (int attempt = 0; attempt < 4; ++attempt) {
    for (auto& x : point) x = dist(rng);
    ModPoly ia, ib;
    if (!image(a, v, point, ia) || !image(b, v, point, ib)) continue;
    if (ia.back() == 0 || ib.back() == 0 || ia.size() != da + 1 || ib.size() != db + 1) continue;
    return static_cast<int>(mod_gcd_degree(std::move(ia), std::move(ib)));
  }
  return -1;
}

Polynomial content_in(const Polynomial& p, Var v) { return fold_gcd(p.coefficients_in(v)); }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  return gcd_nonzero(a, b);
}

}  // namespace garnier
