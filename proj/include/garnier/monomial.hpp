#pragma once

#include <algorithm>
#include <array>
#include <bitset>
#include <cstdint>
#include <cstring>
#include <stdexcept>

#include "garnier/variable.hpp"

namespace garnier {

using VarSet = std::bitset<kMaxVars>;

/// Dense exponent vector over the fixed universe, ordered graded
/// lexicographically (total degree first, then earlier variables dominate).
class Monomial {
 public:
  Monomial() { exps_.fill(0); }

  static Monomial of(Var v, unsigned e = 1) {
    Monomial m;
    m.set(v, e);
    return m;
  }

  unsigned operator[](Var v) const { return exps_[v.id()]; }
  unsigned exponent(std::size_t i) const { return exps_[i]; }
  unsigned degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  void set(Var v, unsigned e) {
    if (e > 255) throw std::overflow_error("monomial exponent exceeds 255");
    deg_ = static_cast<std::uint16_t>(deg_ - exps_[v.id()] + e);
    exps_[v.id()] = static_cast<std::uint8_t>(e);
  }

  VarSet support() const {
    VarSet s;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exps_[i] != 0) s.set(i);
    return s;
  }

  unsigned degree_in(const VarSet& vars) const {
    unsigned d = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (vars.test(i)) d += exps_[i];
    return d;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      const unsigned s = unsigned{a.exps_[i]} + b.exps_[i];
      if (s > 255) throw std::overflow_error("monomial exponent exceeds 255");
      r.exps_[i] = static_cast<std::uint8_t>(s);
    }
    r.deg_ = static_cast<std::uint16_t>(a.deg_ + b.deg_);
    return r;
  }

  bool divides(const Monomial& b) const {
    if (deg_ > b.deg_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exps_[i] > b.exps_[i]) return false;
    return true;
  }

  /// Precondition: b divides *this.
  Monomial operator/(const Monomial& b) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      r.exps_[i] = static_cast<std::uint8_t>(exps_[i] - b.exps_[i]);
    r.deg_ = static_cast<std::uint16_t>(deg_ - b.deg_);
    return r;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    unsigned d = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
      d += r.exps_[i];
    }
    r.deg_ = static_cast<std::uint16_t>(d);
    return r;
  }

  /// Restriction to the variables in `vars` (others zeroed).
  Monomial restrict_to(const VarSet& vars) const {
    Monomial r;
    unsigned d = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (vars.test(i)) {
        r.exps_[i] = exps_[i];
        d += exps_[i];
      }
    r.deg_ = static_cast<std::uint16_t>(d);
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.deg_ == b.deg_ && a.exps_ == b.exps_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  /// Graded lexicographic comparison: negative, zero or positive.
  friend int compare(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_) return a.deg_ < b.deg_ ? -1 : 1;
    return std::memcmp(a.exps_.data(), b.exps_.data(), kMaxVars);
  }
  friend bool operator<(const Monomial& a, const Monomial& b) { return compare(a, b) < 0; }
  friend bool operator>(const Monomial& a, const Monomial& b) { return compare(a, b) > 0; }

  std::size_t hash() const {
    std::uint64_t words[kMaxVars / 8];
    std::memcpy(words, exps_.data(), kMaxVars);
    std::uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (auto w : words) h = (h ^ w) * 0x100000001B3ULL + (h >> 29U);
    return static_cast<std::size_t>(h);
  }

 private:
  std::array<std::uint8_t, kMaxVars> exps_;
  std::uint16_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace garnier
