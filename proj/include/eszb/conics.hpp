#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "eszb/arith.hpp"
#include "eszb/rational.hpp"

namespace eszb::conics {

// Coefficients of the diagonal form x1*y1^2 + x2*y2^2 - x3*y3^2: positive,
// squarefree, pairwise coprime. Validated on construction.
struct QuadTriple {
  std::int64_t x1, x2, x3;

  QuadTriple(std::int64_t x1_, std::int64_t x2_, std::int64_t x3_,
             const arith::SpfTable& table);

  // For callers that have already established the invariants (census loops).
  struct Unchecked {};
  QuadTriple(Unchecked, std::int64_t x1_, std::int64_t x2_, std::int64_t x3_)
      : x1(x1_), x2(x2_), x3(x3_) {}
};

enum class Verdict { soluble, insoluble };

struct SolubilityCertificate {
  Verdict verdict;
  std::array<std::int64_t, 3> solution{0, 0, 0};  // valid when soluble; nontrivial
  std::int64_t obstruction = 0;  // prime divisor of x1*x2*x3 failing, when insoluble
};

// Legendre's criterion: 1 iff x2*x3 is a square mod every odd prime dividing
// x1, x1*x3 mod every odd prime dividing x2, and -x1*x2 mod every odd prime
// dividing x3. The prime 2 imposes no condition.
int legendre_indicator(const QuadTriple& t, const arith::SpfTable& table);

// Ground-truth decision procedure: exhaustive search over the box
// |y1| <= sqrt(x2*x3), |y2| <= sqrt(x1*x3), |y3| <= sqrt(x1*x2), which
// contains a solution whenever one exists. Returns an exact witness or the
// failing residue obstruction.
SolubilityCertificate decide_soluble_search(const QuadTriple& t,
                                            const arith::SpfTable& table);

struct SolubleCensus {
  Rational S;   // sum of d(x1*x2*x3)/(x1*x2*x3) over soluble triples
  Rational S1;  // main-term sum over all-odd admissible triples
  Rational S2;  // S - S1
  std::int64_t soluble_count = 0;
};

// Sweep over all admissible triples with x1*x2*x3 <= X, generated by
// splitting each squarefree product into three ordered coprime parts.
SolubleCensus soluble_census(std::int64_t X, const arith::SpfTable& table);
SolubleCensus soluble_census_serial(std::int64_t X, const arith::SpfTable& table);

// All primitive solutions with 1 <= |y_i| <= bounds[i], every sign listed.
std::vector<std::array<std::int64_t, 3>> quad_fibre_enumerate(
    const QuadTriple& t, const std::array<std::int64_t, 3>& bounds);

// Ordered coprime three-way splittings of a squarefree integer n, one triple
// (x1, x2, x3) per assignment of the prime factors.
std::vector<std::array<std::int64_t, 3>> coprime_splittings(
    std::int64_t n, const arith::SpfTable& table);

}  // namespace eszb::conics
