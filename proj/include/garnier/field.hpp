#pragma once

#include <gmpxx.h>

#include <array>
#include <complex>
#include <cstdint>
#include <memory>
#include <string>

namespace garnier {

/// Exact scalar a + b*i + c*r2 + d*i*r2 in Q(i, sqrt 2).
///
/// The irrational components live behind a pointer that is null whenever
/// b = c = d = 0, which keeps the (overwhelmingly common) rational case to a
/// single mpq.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  FieldElement(const mpq_class& v) : a_(v) { a_.canonicalize(); }  // NOLINT
  FieldElement(mpq_class a, mpq_class b, mpq_class c, mpq_class d);

  FieldElement(const FieldElement& o);
  FieldElement(FieldElement&&) noexcept = default;
  FieldElement& operator=(const FieldElement& o);
  FieldElement& operator=(FieldElement&&) noexcept = default;
  ~FieldElement() = default;

  static FieldElement imaginary_unit() { return {0, 1, 0, 0}; }
  static FieldElement sqrt2() { return {0, 0, 1, 0}; }

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const;
  const mpq_class& c() const;
  const mpq_class& d() const;

  bool is_zero() const { return !ext_ && sgn(a_) == 0; }
  bool is_one() const { return !ext_ && a_ == 1; }
  bool is_rational() const { return !ext_; }
  bool is_real() const;  // b = d = 0
  bool is_integer() const { return !ext_ && a_.get_den() == 1; }

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement l, const FieldElement& r) { return l += r; }
  friend FieldElement operator-(FieldElement l, const FieldElement& r) { return l -= r; }
  friend FieldElement operator*(FieldElement l, const FieldElement& r) { return l *= r; }
  friend FieldElement operator/(FieldElement l, const FieldElement& r) { return l /= r; }
  FieldElement operator-() const;

  /// *this += x * y (or -= when `negate`), reusing `scratch` for the
  /// rational fast path.
  void add_mul(const FieldElement& x, const FieldElement& y, mpq_class& scratch,
               bool negate = false);

  /// Throws std::domain_error on zero.
  FieldElement inverse() const;
  /// Complex conjugation i -> -i (fixes sqrt 2).
  FieldElement conjugate() const;

  friend bool operator==(const FieldElement& l, const FieldElement& r);
  friend bool operator!=(const FieldElement& l, const FieldElement& r) { return !(l == r); }

  std::complex<double> to_complex() const;
  std::size_t hash() const;

  /// "a+b*i+c*r2+d*i*r2" with every component present.
  std::string to_canonical() const;
  /// Compact human form, omitting zero components.
  std::string to_string() const;

  /// Image under Z_(p)[i, sqrt 2] -> F_p with i -> iota, sqrt 2 -> rho.
  /// Returns false if a denominator vanishes mod p.
  bool reduce_mod(std::uint64_t p, std::uint64_t iota, std::uint64_t rho,
                  std::uint64_t& out) const;

 private:
  using Ext = std::array<mpq_class, 3>;
  void normalize();
  Ext& ext();

  mpq_class a_;
  std::unique_ptr<Ext> ext_;
};

}  // namespace garnier
