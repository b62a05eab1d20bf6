#include "eisen/arith.hpp"

#include <algorithm>

namespace eisen {

std::vector<long> prime_factors(long n) {
  std::vector<long> ps;
  if (n < 0) n = -n;
  for (long p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

std::vector<Int> prime_factors(Int n) {
  std::vector<Int> ps;
  if (n < 0) n = -n;
  for (Int p = 2; p * p <= n; p += (p == 2) ? Int(1) : Int(2)) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

long euler_phi(long n) {
  long result = n;
  for (long p : prime_factors(n)) result -= result / p;
  return result;
}

bool is_squarefree(long n) {
  if (n == 0) return false;
  if (n < 0) n = -n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
    while (n % p == 0) n /= p;
  }
  return true;
}

Int strip_primes(Int n, const std::vector<Int>& primes) {
  if (n == 0) return n;
  bool neg = n < 0;
  if (neg) n = -n;
  for (const Int& p : primes)
    while (n % p == 0) n /= p;
  return neg ? Int(-n) : n;
}

Rat strip_primes(const Rat& q, const std::vector<Int>& primes) {
  Int n = strip_primes(numerator(q), primes);
  Int d = strip_primes(denominator(q), primes);
  Rat r(n);
  r /= Rat(d);
  return r;
}

std::vector<long> divisors(long n) {
  std::vector<long> ds;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

}  // namespace eisen
