#ifndef EISEN_CYCLOTOMIC_HPP
#define EISEN_CYCLOTOMIC_HPP

#include <optional>
#include <vector>

#include "eisen/arith.hpp"

namespace eisen {

// Shared context for the field Q(zeta_m): the cyclotomic polynomial Phi_m,
// and every power zeta^k (k mod m) expressed in the power basis
// 1, zeta, ..., zeta^{phi(m)-1}. Contexts are built once and cached.
class CycRing {
 public:
  static const CycRing& get(long m);

  long conductor() const { return m_; }
  long degree() const { return phi_; }
  const std::vector<Int>& cyclotomic() const { return cyclo_; }
  // coordinates of zeta_m^k, any integer k
  const std::vector<Rat>& power(long k) const;

 private:
  explicit CycRing(long m);
  long m_;
  long phi_;
  std::vector<Int> cyclo_;              // monic, coefficient of x^i at index i
  std::vector<std::vector<Rat>> zpow_;  // k in [0, m)
};

// Exact element of Q(zeta_m), stored reduced modulo Phi_m so that equality
// is coordinatewise. Mixed-ring arithmetic is a bug, not a feature: callers
// embed into a common ring first.
class CycNum {
 public:
  CycNum() : m_(1), c_(1, Rat(0)) {}
  explicit CycNum(long m) : m_(m), c_(CycRing::get(m).degree(), Rat(0)) {}
  CycNum(long m, std::vector<Rat> coeffs);

  static CycNum zero(long m) { return CycNum(m); }
  static CycNum one(long m) { return from_rat(m, Rat(1)); }
  static CycNum from_rat(long m, const Rat& r);
  // zeta_m^k
  static CycNum root(long m, long k);
  // e(a/b) = zeta_b^a for b | m, as an element of Q(zeta_m)
  static CycNum unit_phase(long m, long a, long b);

  long ring() const { return m_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool operator==(const CycNum& o) const;
  bool operator!=(const CycNum& o) const { return !(*this == o); }

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator*(const CycNum& o) const;
  CycNum& operator*=(const CycNum& o);
  CycNum& operator*=(const Rat& r);
  CycNum operator*(const Rat& r) const;

  // this += r * o, same ring required
  void addmul(const Rat& r, const CycNum& o);
  // this += r * zeta^k
  void add_monomial(const Rat& r, long k);

  CycNum inverse() const;  // throws on zero
  CycNum conj() const { return galois(-1); }
  // zeta -> zeta^j, gcd(j, m) = 1
  CycNum galois(long j) const;

  // Q(zeta_m) -> Q(zeta_M) for m | M
  CycNum embed(long M) const;
  // exact test/express in the subfield Q(zeta_d), d | m
  std::optional<CycNum> coerce(long d) const;
  std::optional<Rat> to_rat() const;

  // support of all coefficient denominators as a set of primes
  std::vector<Int> denominator_primes() const;

 private:
  long m_;
  std::vector<Rat> c_;
};

inline CycNum operator*(const Rat& r, const CycNum& x) { return x * r; }

}  // namespace eisen

#endif
