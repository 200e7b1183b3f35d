#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "gk2/error.hpp"

namespace gk2 {

using int_t = std::int64_t;

namespace detail {

inline int_t checked_mul(int_t a, int_t b) {
  int_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw invalid_argument("integer overflow in multiplication");
  return r;
}

inline int_t checked_add(int_t a, int_t b) {
  int_t r;
  if (__builtin_add_overflow(a, b, &r)) throw invalid_argument("integer overflow in addition");
  return r;
}

inline int_t checked_sub(int_t a, int_t b) {
  int_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw invalid_argument("integer overflow in subtraction");
  return r;
}

inline int_t ipow(int_t base, int_t exp) {
  int_t r = 1;
  for (int_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

inline bool is_prime(int_t p) {
  if (p < 2) return false;
  for (int_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Splits q = p^e; returns false when q is not a prime power.
inline bool prime_power(int_t q, int_t& p, int_t& e) {
  if (q < 2) return false;
  p = q;
  for (int_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  e = 0;
  int_t r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  return r == 1;
}

inline int_t floor_mod(int_t a, int_t m) {
  int_t r = a % m;
  return r < 0 ? r + m : r;
}

/// Inverse of a modulo m, gcd(a, m) = 1 required.
inline int_t mod_inverse(int_t a, int_t m) {
  int_t g = m, x = 0, x1 = 1, b = floor_mod(a, m);
  while (b != 0) {
    int_t t = g / b;
    int_t tmp = g - t * b;
    g = b;
    b = tmp;
    tmp = x - t * x1;
    x = x1;
    x1 = tmp;
  }
  ensure(g == 1, "mod_inverse: arguments not coprime");
  return floor_mod(x, m);
}

}  // namespace detail
}  // namespace gk2
