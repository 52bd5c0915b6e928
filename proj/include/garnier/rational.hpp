#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "garnier/errors.hpp"
#include "garnier/polynomial.hpp"

namespace garnier {

/// Reduced quotient num/den with gcd(num, den) = 1 and lc(den) = 1.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT
  RationalFunction(const FieldElement& c) : num_(c), den_(1) {}    // NOLINT
  RationalFunction(long c) : num_(c), den_(1) {}                   // NOLINT
  static RationalFunction variable(Var v) { return Polynomial::variable(v); }
  static RationalFunction variable(std::string_view name) { return variable(Var::named(name)); }

  /// Reduces num/den; throws ZeroDivision when den = 0.
  static RationalFunction fraction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  VarSet support() const { return num_.support() | den_.support(); }
  bool depends_on(Var v) const { return num_.depends_on(v) || den_.depends_on(v); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  /// Throws ZeroDivision when b = 0.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  RationalFunction inverse() const;
  RationalFunction pow(int e) const;

  RationalFunction derivative(Var v) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  /// "N" when the denominator is 1, otherwise "(N)/(D)", with N and D in
  /// canonical polynomial text. parse() inverts it exactly.
  std::string to_canonical() const;
  std::string to_string() const;

 private:
  friend RationalFunction substitute(const Polynomial& p,
                                     const std::vector<std::pair<Var, RationalFunction>>& bindings);
  RationalFunction(Polynomial num, Polynomial den, int /*reduced*/)
      : num_(std::move(num)), den_(std::move(den)) {}

  Polynomial num_;
  Polynomial den_;
};

/// Simultaneous substitution: right-hand sides are read in the old variables
/// and unbound variables pass through.
using Bindings = std::vector<std::pair<Var, RationalFunction>>;

RationalFunction substitute(const Polynomial& p, const Bindings& bindings);
/// Throws ZeroDivision if the denominator becomes zero.
RationalFunction substitute(const RationalFunction& f, const Bindings& bindings);

/// Limit as eps -> 0 of a function regular at eps = 0. Throws
/// std::invalid_argument if eps is not of epsilon kind and PoleAtZero if the
/// reduced denominator vanishes at eps = 0.
RationalFunction limit_epsilon_zero(const RationalFunction& f, Var eps);

/// Parses +, -, *, /, ^ (integer exponents, possibly negative), parentheses,
/// rationals, the constants i and r2, and variable names. Throws ParseError.
RationalFunction parse(std::string_view text);

}  // namespace garnier
