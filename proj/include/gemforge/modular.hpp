#pragma once

#include <cstdint>
#include <numeric>
#include <optional>

namespace gemforge {

/// Canonical representative of a in [0, modulus).
constexpr int64_t mod(int64_t a, int64_t modulus) {
  int64_t r = a % modulus;
  return r < 0 ? r + modulus : r;
}

constexpr int64_t gcd(int64_t a, int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

/// Inverse of a modulo `modulus`, or nullopt when gcd(a, modulus) != 1.
/// Modulus 1 is the trivial ring: every element is its own inverse.
constexpr std::optional<int64_t> inverse_mod(int64_t a, int64_t modulus) {
  if (modulus == 1) return 0;
  int64_t r0 = mod(a, modulus), r1 = modulus;
  int64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    int64_t t = r0 / r1;
    int64_t r2 = r0 - t * r1;
    r0 = r1;
    r1 = r2;
    int64_t s2 = s0 - t * s1;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) return std::nullopt;
  return mod(s0, modulus);
}

/// (-1)^e as +1/-1.
constexpr int sign_power(int64_t e) { return mod(e, 2) == 0 ? 1 : -1; }

}  // namespace gemforge
