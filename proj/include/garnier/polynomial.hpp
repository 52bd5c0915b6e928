#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "garnier/field.hpp"
#include "garnier/monomial.hpp"

namespace garnier {

struct Term {
  Monomial mono;
  FieldElement coef;
};

/// Sparse multivariate polynomial over Q(i, sqrt 2).
///
/// Terms are kept strictly decreasing in graded lexicographic order with no
/// zero coefficients, so structural equality is mathematical equality.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const FieldElement& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(FieldElement(c)) {}  // NOLINT
  static Polynomial variable(Var v, unsigned e = 1);
  static Polynomial monomial(const Monomial& m, FieldElement c);
  /// Sorts and merges arbitrary (possibly repeated) terms.
  static Polynomial from_terms(std::vector<Term> terms);
  /// Adopts terms already in canonical order.
  static Polynomial from_sorted(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  const Term& leading_term() const { return terms_.front(); }
  const Term& trailing_term() const { return terms_.back(); }
  /// Constant coefficient (zero if absent).
  FieldElement constant_term() const;

  VarSet support() const;
  bool depends_on(Var v) const;
  unsigned degree(Var v) const;
  /// Maximum over terms of the summed exponents of `vars`; throws
  /// std::domain_error for the zero polynomial.
  unsigned degree_in(const VarSet& vars) const;
  unsigned total_degree() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const FieldElement& c) const;
  Polynomial times_monomial(const Monomial& m, const FieldElement& c) const;
  Polynomial pow(unsigned e) const;

  /// Exact quotient if `d` divides *this, otherwise nullopt.
  std::optional<Polynomial> exact_div(const Polynomial& d) const;
  /// Precondition: m divides every term.
  Polynomial div_monomial(const Monomial& m) const;
  /// Gcd of all monomials (the largest monomial dividing every term).
  Monomial monomial_content() const;
  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;

  Polynomial derivative(Var v) const;
  /// Coefficients as a polynomial in v: result[k] is the coefficient of v^k.
  std::vector<Polynomial> coefficients_in(Var v) const;
  static Polynomial from_coefficients(std::span<const Polynomial> coeffs, Var v);
  /// Groups terms by their exponents on `vars`; returns the coefficient
  /// polynomials (free of `vars`) in unspecified order.
  std::vector<Polynomial> coefficients_wrt(const VarSet& vars) const;
  /// Splits into (monomial in `vars`, coefficient) pairs.
  std::vector<std::pair<Monomial, Polynomial>> split_wrt(const VarSet& vars) const;
  Polynomial evaluate(Var v, const FieldElement& value) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string to_canonical() const;
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace garnier
