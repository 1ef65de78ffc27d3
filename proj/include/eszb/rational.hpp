#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace eszb {

// Exact rational arithmetic. Census sums accumulate these so that results
// are independent of evaluation order and shard count.
using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den) {
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

// Balanced-tree sum of num/den terms. The balanced shape keeps intermediate
// denominators small enough that exact summation over ~10^6 distinct
// denominators stays cheap.
Rational sum_fractions(const std::vector<std::pair<std::int64_t, std::int64_t>>& terms);

// Round an exact rational to `digits` significant decimal digits.
std::string to_decimal_string(const Rational& q, int digits = 12);

std::string num_string(const Rational& q);
std::string den_string(const Rational& q);

}  // namespace eszb
