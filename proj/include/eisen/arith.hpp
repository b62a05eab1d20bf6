#ifndef EISEN_ARITH_HPP
#define EISEN_ARITH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace eisen {

namespace mp = boost::multiprecision;

// Arbitrary-precision integers and rationals. GMP keeps rationals in
// lowest terms with positive denominator, which is exactly the invariant
// the rest of the library relies on.
using Int = mp::number<mp::gmp_int, mp::et_off>;
using Rat = mp::number<mp::gmp_rational, mp::et_off>;

inline Int igcd(const Int& a, const Int& b) { return gcd(a, b); }
inline Int ilcm(const Int& a, const Int& b) { return lcm(a, b); }

inline long lgcd(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) { long t = a % b; a = b; b = t; }
  return a;
}

inline long llcm(long a, long b) {
  if (a == 0 || b == 0) return 0;
  return a / lgcd(a, b) * b;
}

// floor(a/b) for b != 0
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Int mod_positive(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += abs(m);
  return r;
}

// fractional part <t> in [0,1)
inline Rat frac_part(const Rat& t) {
  Int fl = floor_div(numerator(t), denominator(t));
  return t - Rat(fl);
}

// B2(<t>) = <t>^2 - <t> + 1/6, 1-periodic
inline Rat bernoulli2(const Rat& t) {
  Rat u = frac_part(t);
  return u * u - u + Rat(1, 6);
}

inline long power_mod(long base, long exp, long mod) {
  long result = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) result = static_cast<long>((static_cast<__int128>(result) * base) % mod);
    base = static_cast<long>((static_cast<__int128>(base) * base) % mod);
    exp >>= 1;
  }
  return result;
}

inline long inverse_mod(long a, long m) {
  long t = 0, newt = 1, r = m, newr = ((a % m) + m) % m;
  while (newr != 0) {
    long q = r / newr;
    long tmp = t - q * newt; t = newt; newt = tmp;
    tmp = r - q * newr; r = newr; newr = tmp;
  }
  if (r != 1) throw std::domain_error("inverse_mod: " + std::to_string(a) + " not invertible mod " + std::to_string(m));
  return ((t % m) + m) % m;
}

// distinct prime factors by trial division
std::vector<long> prime_factors(long n);
std::vector<Int> prime_factors(Int n);
bool is_prime(long n);
long euler_phi(long n);

// squarefree part test
bool is_squarefree(long n);

// n with all factors of the listed primes removed
Int strip_primes(Int n, const std::vector<Int>& primes);

// the prime-to-S part of a positive rational: for each listed prime, drop
// its contribution from numerator and denominator
Rat strip_primes(const Rat& q, const std::vector<Int>& primes);

// divisors of n in increasing order
std::vector<long> divisors(long n);

}  // namespace eisen

#endif
