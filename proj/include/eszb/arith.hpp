#pragma once

#include <cstdint>
#include <vector>

#include "eszb/int128.hpp"
#include "eszb/rational.hpp"

namespace eszb::arith {

struct FactorEntry {
  std::int64_t prime;
  int exponent;
};

// A nonzero signed integer together with the full factorization of |value|.
// Primes strictly increasing, every exponent >= 1.
struct FactoredInteger {
  std::int64_t value = 0;
  std::vector<FactorEntry> factors;

  int omega() const { return static_cast<int>(factors.size()); }
  bool squarefree() const {
    for (const auto& f : factors)
      if (f.exponent > 1) return false;
    return true;
  }
};

// Smallest-prime-factor sieve on [2, limit]. Immutable after construction and
// safe to share across threads. Trial division by the sieved primes extends
// factorization up to limit^2.
class SpfTable {
 public:
  explicit SpfTable(std::int64_t limit);

  std::int64_t limit() const { return limit_; }

  std::int32_t spf(std::int64_t n) const;

  FactoredInteger factorize(std::int64_t n) const;

  const std::vector<std::int32_t>& primes() const { return primes_; }

  static std::int64_t bytes_needed(std::int64_t limit);

 private:
  std::int64_t limit_;
  std::vector<std::int32_t> spf_;
  std::vector<std::int32_t> primes_;
};

FactoredInteger factorize(std::int64_t n, const SpfTable& table);

// Largest k with k^2 | n, tabulated for all n in [1, limit]. Gives O(1)
// squarefree parts and square cofactors for the census hot loops.
class SquareCofactorTable {
 public:
  explicit SquareCofactorTable(std::int64_t limit);

  std::int64_t limit() const { return limit_; }

  // Largest k such that k*k divides n. n in [1, limit].
  std::int64_t cofactor(std::int64_t n) const { return k_[static_cast<std::size_t>(n)]; }

  std::int64_t squarefree_part(std::int64_t n) const {
    std::int64_t k = k_[static_cast<std::size_t>(n)];
    return n / (k * k);
  }

  bool is_squarefree(std::int64_t n) const { return k_[static_cast<std::size_t>(n)] == 1; }

 private:
  std::int64_t limit_;
  std::vector<std::uint16_t> k_;
};

// sqf(n): product of p^(e_p mod 2) over the factorization of |n|. Always
// positive; sign handling lives in the caller.
std::int64_t squarefree_part(std::int64_t n, const SpfTable& table);

// Product of p^(e_p mod m) over |n|; equals 1 when m = 1 and the squarefree
// part when m = 2.
std::int64_t m_free_part(std::int64_t n, std::int64_t m, const SpfTable& table);

struct SquarefreeSplit {
  std::int64_t core;      // signed squarefree, sign(core) = sign(n)
  std::int64_t cofactor;  // >= 1, core * cofactor^2 = n
};

SquarefreeSplit squarefree_split(std::int64_t n, const SpfTable& table);

// Jacobi symbol (a/n) for odd n >= 1. Even or nonpositive n is rejected.
int jacobi(std::int64_t a, std::int64_t n);

// d_k(n): number of ordered k-tuples of positive integers with product n.
std::int64_t divisor_count_k(const FactoredInteger& f, int k);

// Exact sum of d3(n) for n <= Z, by the double hyperbola method. No tables.
std::int64_t d3_sum(std::int64_t Z);

// Exact sum of d_k(n) for n <= Z via a d_k sieve (needs memory ~ Z entries).
std::int64_t dk_sum_sieved(std::int64_t Z, int k);

// Exact rational sum of d_k(n)/n for n <= Z.
Rational dk_harmonic_sum(std::int64_t Z, int k);

// Per-n d_k values for n in [1, Z].
std::vector<std::int64_t> dk_sieve(std::int64_t Z, int k);

}  // namespace eszb::arith
