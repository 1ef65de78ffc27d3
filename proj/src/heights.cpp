#include "eszb/heights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "eszb/errors.hpp"

namespace eszb::heights {

std::string ProjectivePoint::str() const {
  return "[" + std::to_string(a) + ":" + std::to_string(b) + "]";
}

ProjectivePoint canonicalize(std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0) throw std::invalid_argument("canonicalize: (0, 0) is not a point");
  std::int64_t g = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
  a /= g;
  b /= g;
  if (b < 0 || (b == 0 && a < 0)) {
    a = -a;
    b = -b;
  }
  return {a, b};
}

MCurveSpec::MCurveSpec(std::vector<MarkedPoint> marked) {
  for (auto& mp : marked) {
    mp.point = canonicalize(mp.point.a, mp.point.b);
    if (mp.multiplicity < 1)
      throw std::invalid_argument("MCurveSpec: multiplicities must be >= 1");
    if (mp.multiplicity == 1) continue;  // no-op point
    for (const auto& other : marked_)
      if (other.point == mp.point)
        throw std::invalid_argument("MCurveSpec: marked points must be distinct");
    marked_.push_back(mp);
  }
}

bool MCurveSpec::is_marked(const ProjectivePoint& t) const {
  for (const auto& mp : marked_)
    if (mp.point == t) return true;
  return false;
}

const MCurveSpec& MCurveSpec::standard_222() {
  static const MCurveSpec spec{std::vector<MarkedPoint>{
      {{0, 1}, 2}, {{-1, 1}, 2}, {{1, 0}, 2}}};
  return spec;
}

namespace {

std::int64_t resultant_abs(const ProjectivePoint& t, const ProjectivePoint& P) {
  i128 r = static_cast<i128>(t.a) * P.b - static_cast<i128>(t.b) * P.a;
  if (r == 0)
    throw std::invalid_argument("points coincide; intersection multiplicity is infinite");
  if (r < 0) r = -r;
  if (r > INT64_MAX) throw OverflowError("lambda product exceeds 64 bits");
  return static_cast<std::int64_t>(r);
}

}  // namespace

int intersection_multiplicity(const ProjectivePoint& t, const ProjectivePoint& P,
                              std::int64_t p) {
  if (p < 2) throw std::invalid_argument("intersection_multiplicity: p must be a prime >= 2");
  std::int64_t r = resultant_abs(t, P);
  int ord = 0;
  while (r % p == 0) {
    r /= p;
    ++ord;
  }
  return ord;
}

std::int64_t lambda_product(const ProjectivePoint& t, const ProjectivePoint& P) {
  return resultant_abs(t, P);
}

std::int64_t stacky_local_height(const ProjectivePoint& t, const ProjectivePoint& P, int m,
                                 const arith::SpfTable& table) {
  if (m < 1) throw std::invalid_argument("stacky_local_height: multiplicity must be >= 1");
  return arith::m_free_part(lambda_product(t, P), m, table);
}

i128 HeightBreakdown::stacky_part() const {
  i128 s = 1;
  for (const auto& lp : local_parts) s = checked_mul128(s, lp.stacky_local);
  return s;
}

HeightBreakdown stacky_height(const MCurveSpec& spec, const ProjectivePoint& t,
                              const arith::SpfTable& table) {
  if (spec.is_marked(t))
    throw StackyPointError("stacky_height: " + t.str() + " is a marked point");
  HeightBreakdown out;
  out.classical = std::max(t.a < 0 ? -t.a : t.a, t.b < 0 ? -t.b : t.b);
  out.total = out.classical;
  for (const auto& mp : spec.marked()) {
    std::int64_t lam = lambda_product(t, mp.point);
    std::int64_t loc = arith::m_free_part(lam, mp.multiplicity, table);
    out.local_parts.push_back({mp.point, mp.multiplicity, lam, loc});
    out.total = checked_mul128(out.total, loc);
  }
  return out;
}

i128 height_pqr(std::int64_t a, std::int64_t b, int p, int q, int r,
                const arith::SpfTable& table) {
  std::int64_t c;
  if (__builtin_add_overflow(a, b, &c)) throw OverflowError("height: a + b overflows");
  if (a == 0 || b == 0 || c == 0)
    throw StackyPointError("height: a, b, a+b must all be nonzero");
  if (std::gcd(a < 0 ? -a : a, b < 0 ? -b : b) != 1)
    throw std::invalid_argument("height: a, b must be coprime");
  std::int64_t aa = a < 0 ? -a : a, ab = b < 0 ? -b : b;
  i128 h = arith::m_free_part(a, p, table);
  h = checked_mul128(h, arith::m_free_part(c, q, table));
  h = checked_mul128(h, arith::m_free_part(b, r, table));
  h = checked_mul128(h, std::max(aa, ab));
  return h;
}

i128 eszb_height_222(std::int64_t a, std::int64_t b, const arith::SpfTable& table) {
  return height_pqr(a, b, 2, 2, 2, table);
}

IntegralityWitness is_integral(const MCurveSpec& spec, const ProjectivePoint& t,
                               const arith::SpfTable& table) {
  if (spec.is_marked(t))
    throw StackyPointError("is_integral: " + t.str() + " is a marked point");
  IntegralityWitness out;
  bool via_mfree = true;
  for (const auto& mp : spec.marked()) {
    std::int64_t lam = lambda_product(t, mp.point);
    bool local_trivial = arith::m_free_part(lam, mp.multiplicity, table) == 1;
    // Divisibility condition, prime by prime: every exponent of lambda must
    // be a multiple of the marked multiplicity.
    bool congruent = true;
    std::int64_t failing_prime = 0;
    for (const auto& fe : table.factorize(lam).factors) {
      if (fe.exponent % mp.multiplicity != 0) {
        congruent = false;
        failing_prime = fe.prime;
        break;
      }
    }
    // The two characterizations coincide over the rationals; a disagreement
    // here is a logic error, not an input error.
    if (local_trivial != congruent)
      throw std::logic_error("is_integral: m-free and divisibility verdicts disagree at " +
                             mp.point.str());
    if (!congruent && out.integral) {
      out.integral = false;
      out.failing_point = mp.point;
      out.failing_prime = failing_prime;
    }
    via_mfree = via_mfree && local_trivial;
  }
  // Containment direction: a point passing every divisibility condition has
  // trivial stacky part.
  if (out.integral && !via_mfree)
    throw std::logic_error("is_integral: containment direction violated");
  return out;
}

}  // namespace eszb::heights
