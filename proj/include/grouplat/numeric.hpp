#pragma once

#include <cstdint>

#include "grouplat/errors.hpp"

namespace grouplat {

/// a + b with overflow detection (never wraps silently).
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw NumericError("integer overflow in addition");
  return r;
}

/// a * b with overflow detection.
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw NumericError("integer overflow in multiplication");
  return r;
}

/// Largest squarefree divisor of n (the radical: the product of the distinct
/// primes dividing n). Trial division; n <= 2^16 is the intended range but
/// any positive 64-bit value works.
inline std::int64_t squarefree_part(std::int64_t n) {
  GROUPLAT_CHECK(n > 0, "squarefree_part needs a positive argument");
  std::int64_t result = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result *= p;
      while (n % p == 0) n /= p;
    }
  }
  return result * n;  // leftover n is prime (or 1)
}

}  // namespace grouplat
