#include "eszb/rational.hpp"

#include <cstddef>
#include <cstdio>

namespace eszb {

namespace {

Rational sum_range(const std::vector<std::pair<std::int64_t, std::int64_t>>& terms,
                   std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return make_rational(terms[lo].first, terms[lo].second);
  std::size_t mid = lo + (hi - lo) / 2;
  return sum_range(terms, lo, mid) + sum_range(terms, mid, hi);
}

}  // namespace

Rational sum_fractions(const std::vector<std::pair<std::int64_t, std::int64_t>>& terms) {
  if (terms.empty()) return Rational(0);
  return sum_range(terms, 0, terms.size());
}

std::string to_decimal_string(const Rational& q, int digits) {
  // 256 bits of working precision is ample for 12 significant digits.
  mpf_class f(q, 256);
  char buf[128];
  gmp_snprintf(buf, sizeof(buf), "%.*Fg", digits, f.get_mpf_t());
  return buf;
}

std::string num_string(const Rational& q) { return q.get_num().get_str(); }
std::string den_string(const Rational& q) { return q.get_den().get_str(); }

}  // namespace eszb
