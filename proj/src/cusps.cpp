#include "eisen/cusps.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace eisen {

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
  Mat2 c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

std::vector<Cusp> enumerate_cusps(long N) {
  if (N < 1) throw std::domain_error("enumerate_cusps: level must be positive");
  std::vector<Cusp> out;
  for (long d : divisors(N)) {
    long g = lgcd(d, N / d);
    for (long c = 1; c <= g; ++c) {
      if (lgcd(c, g) != 1) continue;
      // lift c to a representative coprime to N (smallest such in its class)
      long x = c;
      while (lgcd(x, N) != 1) x += g;
      Cusp cusp;
      cusp.level = N;
      cusp.d = d;
      cusp.x = x;
      cusp.field_conductor = g;
      long cden = N / d;
      // width = N / gcd(cden^2, N); go through Int to dodge overflow
      cusp.width = static_cast<long>(Int(N) / igcd(Int(cden) * cden, Int(N)));
      // unimodular completion with first column (x, N/d):
      // v = x^{-1} mod (N/d) in [0, N/d), u = (x v - 1) / (N/d)
      long v = (cden == 1) ? 0 : inverse_mod(x, cden);
      Int u = (Int(x) * v - 1) / cden;
      cusp.sigma = {{{Int(x), u}, {Int(cden), Int(v)}}};
      if (mat2_det(cusp.sigma) != 1) throw std::logic_error("enumerate_cusps: completion is not unimodular");
      out.push_back(std::move(cusp));
    }
  }
  return out;
}

long psi_index(long N) {
  long r = N;
  for (long p : prime_factors(N)) r += r / p;
  return r;
}

OrbitOracle orbit_oracle(long N) {
  if (N < 1) throw std::domain_error("orbit_oracle: level must be positive");
  std::vector<long> units;
  for (long u = 0; u < N; ++u)
    if (lgcd(u, N) == 1 || N == 1) units.push_back(u);

  // canonical representative per point: the lex-least element of its unit
  // orbit, found by sweeping points in lex order
  std::vector<long> canon(N * N, -1);  // index c*N+d -> index of representative
  auto valid = [&](long c, long d) { return lgcd(lgcd(c, d), N) == 1 || N == 1; };
  for (long c = 0; c < N; ++c)
    for (long d = 0; d < N; ++d) {
      if (!valid(c, d) || canon[c * N + d] >= 0) continue;
      for (long u : units) canon[((u * c) % N) * N + (u * d) % N] = c * N + d;
    }

  OrbitOracle oracle;
  std::vector<long> orbit_id(N * N, -1);
  for (long c = 0; c < N; ++c)
    for (long d = 0; d < N; ++d) {
      if (!valid(c, d)) continue;
      long p0 = canon[c * N + d];
      if (orbit_id[p0] >= 0) continue;
      // walk the translation orbit (c : d) -> (c : c + d)
      long id = oracle.count++;
      long size = 0;
      long p = p0;
      do {
        orbit_id[p] = id;
        ++size;
        long pc = p / N, pd = p % N;
        p = canon[pc * N + (pc + pd) % N];
      } while (p != p0);
      oracle.orbit_sizes.push_back(size);
    }

  // match enumerated cusps to orbits through the bottom row of sigma
  std::vector<Cusp> cusps = enumerate_cusps(N);
  oracle.orbit_of_cusp.assign(cusps.size(), -1);
  std::vector<bool> hit(oracle.count, false);
  bool bijective = cusps.size() == static_cast<size_t>(oracle.count);
  for (size_t i = 0; i < cusps.size(); ++i) {
    long c = static_cast<long>(mod_positive(cusps[i].sigma[1][0], Int(N)));
    long d = static_cast<long>(mod_positive(cusps[i].sigma[1][1], Int(N)));
    long id = orbit_id[canon[c * N + d]];
    if (id < 0) { bijective = false; continue; }
    oracle.orbit_of_cusp[i] = id;
    if (hit[id]) bijective = false;
    hit[id] = true;
  }
  for (bool h : hit) bijective = bijective && h;
  oracle.labels_bijective = bijective;
  return oracle;
}

}  // namespace eisen
