#pragma once

#include <ostream>
#include <random>
#include <vector>

#include "garnier/rational.hpp"

namespace garnier {
inline void PrintTo(const RationalFunction& r, std::ostream* os) { *os << r.to_string(); }
inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << p.to_string(); }
}  // namespace garnier

namespace garnier::testing {

inline Var v(const char* name) { return Var::named(name); }
inline RationalFunction rf(const char* text) { return parse(text); }
inline Polynomial poly(const char* text) {
  const RationalFunction r = parse(text);
  if (!r.is_polynomial()) throw std::invalid_argument("not a polynomial");
  return r.num();
}

/// Random polynomial in `vars` with small integer (optionally Q(i, r2))
/// coefficients and total degree <= max_deg.
inline Polynomial random_poly(std::mt19937& rng, const std::vector<Var>& vars, unsigned max_deg,
                              int terms, bool extended = false) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  std::vector<Term> out;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    const unsigned d = deg(rng);
    for (unsigned j = 0; j < d; ++j) {
      const Var x = vars[pick(rng)];
      m.set(x, m[x] + 1);
    }
    FieldElement c = extended ? FieldElement(coef(rng), coef(rng), coef(rng), coef(rng)) : FieldElement(coef(rng));
    out.push_back({m, c});
  }
  return Polynomial::from_terms(std::move(out));
}

}  // namespace garnier::testing
