#include "eszb/int128.hpp"

#include <cmath>

namespace eszb {

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return {s.rbegin(), s.rend()};
}

std::string to_string(i128 v) {
  if (v < 0) return "-" + to_string(static_cast<u128>(-v));
  return to_string(static_cast<u128>(v));
}

std::int64_t isqrt64(std::int64_t n) {
  if (n < 0) throw OverflowError("isqrt64 of negative value");
  if (n == 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<u128>(r) * static_cast<u128>(r) > static_cast<u128>(n)) --r;
  while (static_cast<u128>(r + 1) * static_cast<u128>(r + 1) <= static_cast<u128>(n)) ++r;
  return r;
}

}  // namespace eszb
