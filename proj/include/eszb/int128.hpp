#pragma once

#include <cstdint>
#include <string>

#include "eszb/errors.hpp"

namespace eszb {

using i128 = __int128;
using u128 = unsigned __int128;

std::string to_string(i128 v);
std::string to_string(u128 v);

// Exact floor(sqrt(n)) for n >= 0.
std::int64_t isqrt64(std::int64_t n);

inline bool is_square64(std::int64_t n) {
  if (n < 0) return false;
  std::int64_t r = isqrt64(n);
  return r * r == n;
}

// a*b with wraparound detection.
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("64-bit multiply overflow: " + std::to_string(a) + " * " +
                        std::to_string(b));
  return r;
}

inline i128 checked_mul128(i128 a, i128 b) {
  if (a == 0 || b == 0) return 0;
  i128 r = a * b;
  if (r / b != a) throw OverflowError("128-bit multiply overflow");
  return r;
}

}  // namespace eszb
