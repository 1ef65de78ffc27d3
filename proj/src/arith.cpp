#include "eszb/arith.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "eszb/errors.hpp"

namespace eszb::arith {

SpfTable::SpfTable(std::int64_t limit) : limit_(limit) {
  if (limit < 2) throw std::invalid_argument("SpfTable: limit must be >= 2");
  spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (spf_[static_cast<std::size_t>(i)] == 0) {
      primes_.push_back(static_cast<std::int32_t>(i));
      for (std::int64_t j = i; j <= limit; j += i) {
        auto& s = spf_[static_cast<std::size_t>(j)];
        if (s == 0) s = static_cast<std::int32_t>(i);
      }
    }
  }
}

std::int64_t SpfTable::bytes_needed(std::int64_t limit) {
  return (limit + 1) * static_cast<std::int64_t>(sizeof(std::int32_t));
}

std::int32_t SpfTable::spf(std::int64_t n) const {
  if (n < 2 || n > limit_)
    throw std::invalid_argument("SpfTable::spf: n out of range [2, limit]");
  return spf_[static_cast<std::size_t>(n)];
}

FactoredInteger SpfTable::factorize(std::int64_t n) const {
  if (n == 0) throw std::invalid_argument("factorize: n must be nonzero");
  FactoredInteger out;
  out.value = n;
  std::int64_t m = n < 0 ? -n : n;
  if (m > limit_) {
    // Trial division by sieved primes handles m up to limit^2.
    if (m / limit_ > limit_)
      throw CapacityError(
          "factorize: |n| = " + std::to_string(m) + " exceeds sieve capacity limit^2 = " +
          std::to_string(limit_) + "^2; need sieve limit >= " +
          std::to_string(isqrt64(m) + 1));
    for (std::int32_t p : primes_) {
      if (static_cast<std::int64_t>(p) * p > m) break;
      if (m % p == 0) {
        int e = 0;
        while (m % p == 0) {
          m /= p;
          ++e;
        }
        out.factors.push_back({p, e});
      }
      if (m == 1) break;
    }
    if (m > 1) out.factors.push_back({m, 1});
    return out;
  }
  while (m > 1) {
    std::int64_t p = spf_[static_cast<std::size_t>(m)];
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.factors.push_back({p, e});
  }
  return out;
}

FactoredInteger factorize(std::int64_t n, const SpfTable& table) { return table.factorize(n); }

SquareCofactorTable::SquareCofactorTable(std::int64_t limit) : limit_(limit) {
  if (limit < 1) throw std::invalid_argument("SquareCofactorTable: limit must be >= 1");
  // k fits in 16 bits as long as limit < (2^16)^2.
  if (limit >= (1LL << 32))
    throw CapacityError("SquareCofactorTable: limit too large for 16-bit cofactors");
  k_.assign(static_cast<std::size_t>(limit) + 1, 1);
  for (std::int64_t k = 2; k * k <= limit; ++k) {
    std::int64_t kk = k * k;
    for (std::int64_t n = kk; n <= limit; n += kk)
      k_[static_cast<std::size_t>(n)] = static_cast<std::uint16_t>(k);
  }
}

std::int64_t squarefree_part(std::int64_t n, const SpfTable& table) {
  if (n == 0) throw std::invalid_argument("squarefree_part: n must be nonzero");
  FactoredInteger f = table.factorize(n);
  std::int64_t out = 1;
  for (const auto& fe : f.factors)
    if (fe.exponent % 2 == 1) out = checked_mul(out, fe.prime);
  return out;
}

std::int64_t m_free_part(std::int64_t n, std::int64_t m, const SpfTable& table) {
  if (n == 0) throw std::invalid_argument("m_free_part: n must be nonzero");
  if (m < 1) throw std::invalid_argument("m_free_part: m must be >= 1");
  if (m == 1) return 1;
  FactoredInteger f = table.factorize(n);
  std::int64_t out = 1;
  for (const auto& fe : f.factors) {
    int r = static_cast<int>(fe.exponent % m);
    for (int i = 0; i < r; ++i) out = checked_mul(out, fe.prime);
  }
  return out;
}

SquarefreeSplit squarefree_split(std::int64_t n, const SpfTable& table) {
  if (n == 0) throw std::invalid_argument("squarefree_split: n must be nonzero");
  FactoredInteger f = table.factorize(n);
  std::int64_t core = 1, cof = 1;
  for (const auto& fe : f.factors) {
    if (fe.exponent % 2 == 1) core = checked_mul(core, fe.prime);
    for (int i = 0; i < fe.exponent / 2; ++i) cof = checked_mul(cof, fe.prime);
  }
  if (n < 0) core = -core;
  return {core, cof};
}

int jacobi(std::int64_t a, std::int64_t n) {
  if (n <= 0 || n % 2 == 0)
    throw std::invalid_argument("jacobi: lower argument must be positive and odd");
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

std::int64_t divisor_count_k(const FactoredInteger& f, int k) {
  if (f.value <= 0) throw std::invalid_argument("divisor_count_k: value must be positive");
  if (k < 1) throw std::invalid_argument("divisor_count_k: k must be >= 1");
  std::int64_t out = 1;
  for (const auto& fe : f.factors) {
    // binomial(e + k - 1, k - 1)
    std::int64_t b = 1;
    for (int i = 1; i <= k - 1; ++i) {
      b = checked_mul(b, fe.exponent + k - i);
      b /= i;
    }
    out = checked_mul(out, b);
  }
  return out;
}

namespace {

// Sum of floor(M/b) for b <= M, by the hyperbola fold.
std::int64_t d2_sum(std::int64_t M) {
  if (M <= 0) return 0;
  std::int64_t s = isqrt64(M);
  std::int64_t total = 0;
  for (std::int64_t b = 1; b <= s; ++b) total += M / b;
  return 2 * total - s * s;
}

}  // namespace

std::int64_t d3_sum(std::int64_t Z) {
  if (Z < 1) throw std::invalid_argument("d3_sum: Z must be >= 1");
  if (Z > 2'000'000'000LL)
    throw CapacityError("d3_sum: Z beyond supported range 2e9");
  i128 total = 0;
  for (std::int64_t a = 1; a <= Z; ++a) total += d2_sum(Z / a);
  if (total > INT64_MAX) throw OverflowError("d3_sum: result exceeds 64 bits");
  return static_cast<std::int64_t>(total);
}

std::vector<std::int64_t> dk_sieve(std::int64_t Z, int k) {
  if (Z < 1) throw std::invalid_argument("dk_sieve: Z must be >= 1");
  if (k < 1 || k > 16) throw std::invalid_argument("dk_sieve: k must be in [1, 16]");
  // spf sieve, then multiplicative evaluation d_k(p^e) = binom(e+k-1, k-1).
  std::vector<std::int32_t> spf(static_cast<std::size_t>(Z) + 1, 0);
  for (std::int64_t i = 2; i <= Z; ++i) {
    if (spf[static_cast<std::size_t>(i)] == 0)
      for (std::int64_t j = i; j <= Z; j += i) {
        auto& s = spf[static_cast<std::size_t>(j)];
        if (s == 0) s = static_cast<std::int32_t>(i);
      }
  }
  std::vector<std::int64_t> d(static_cast<std::size_t>(Z) + 1, 0);
  d[0] = 0;
  if (Z >= 1) d[1] = 1;
  auto ppow_count = [k](int e) {
    std::int64_t b = 1;
    for (int i = 1; i <= k - 1; ++i) {
      b = b * (e + k - i) / i;
    }
    return b;
  };
  for (std::int64_t n = 2; n <= Z; ++n) {
    std::int64_t p = spf[static_cast<std::size_t>(n)];
    std::int64_t m = n;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    d[static_cast<std::size_t>(n)] =
        checked_mul(d[static_cast<std::size_t>(m)], ppow_count(e));
  }
  return d;
}

std::int64_t dk_sum_sieved(std::int64_t Z, int k) {
  auto d = dk_sieve(Z, k);
  i128 total = 0;
  for (std::int64_t n = 1; n <= Z; ++n) total += d[static_cast<std::size_t>(n)];
  if (total > INT64_MAX) throw OverflowError("dk_sum_sieved: result exceeds 64 bits");
  return static_cast<std::int64_t>(total);
}

Rational dk_harmonic_sum(std::int64_t Z, int k) {
  auto d = dk_sieve(Z, k);
  std::vector<std::pair<std::int64_t, std::int64_t>> terms;
  terms.reserve(static_cast<std::size_t>(Z));
  for (std::int64_t n = 1; n <= Z; ++n) terms.emplace_back(d[static_cast<std::size_t>(n)], n);
  return sum_fractions(terms);
}

}  // namespace eszb::arith
