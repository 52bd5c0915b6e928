#pragma once

#include <cstdint>

// Word-size prime field helpers used for probabilistic-free degree bounds in
// the GCD (images only ever give upper bounds, so no correctness depends on
// the choice of prime).
namespace garnier::modular {

/// p = 1 mod 8, so both sqrt(-1) and sqrt(2) exist in F_p.
inline constexpr std::uint64_t kPrime = 4611686018427387817ULL;
inline constexpr std::uint64_t kSqrtMinusOne = 4490822397581186023ULL;
inline constexpr std::uint64_t kSqrtTwo = 1258367634252069079ULL;

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
inline std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e != 0) {
    if (e & 1U) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1U;
  }
  return r;
}
inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) { return pow(a, p - 2, p); }

}  // namespace garnier::modular
