#pragma once

#include "garnier/polynomial.hpp"

namespace garnier {

/// Greatest common divisor with leading coefficient 1; gcd(p, 0) = monic(p)
/// and gcd(0, 0) = 0.
///
/// Content and primitive parts are split recursively over variables and the
/// primitive parts are combined with a subresultant pseudo-remainder
/// sequence. Cheap exits come first: monomial content, variables present in
/// only one operand, trial division, and a word-size prime image that proves
/// the gcd is free of the main variable.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
Polynomial content_in(const Polynomial& p, Var v);

/// Upper bound on deg_v gcd(a, b) from one modular image, or -1 when no
/// admissible evaluation point was found. Exposed for testing.
int gcd_degree_bound(const Polynomial& a, const Polynomial& b, Var v);

}  // namespace garnier
