#ifndef EISEN_CUSPS_HPP
#define EISEN_CUSPS_HPP

#include <array>
#include <vector>

#include "eisen/arith.hpp"

namespace eisen {

using Mat2 = std::array<std::array<Int, 2>, 2>;

inline Int mat2_det(const Mat2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
Mat2 mat2_mul(const Mat2& a, const Mat2& b);

// Cusp class [d x / N] of the level-N modular curve, with a fixed
// unimodular matrix sigma whose first column is (x, N/d); sigma sends the
// infinite cusp to this one.
struct Cusp {
  long level = 1;
  long d = 1;
  long x = 1;
  Mat2 sigma;
  long width = 1;            // N / gcd((N/d)^2, N)
  long field_conductor = 1;  // gcd(d, N/d)
  bool rational() const { return field_conductor == 1; }
};

// One cusp per divisor d of N and residue class x in (Z/(d, N/d))^x, with x
// lifted to be coprime to N so the unimodular completion exists.
std::vector<Cusp> enumerate_cusps(long N);

// index of the level-N congruence subgroup: N prod_{p | N} (1 + 1/p);
// equals the sum of all cusp widths
long psi_index(long N);

// Independent count of the cusps: orbits of (c : d) -> (c : c + d) on the
// projective line over Z/N. Orbit sizes are the widths.
struct OrbitOracle {
  long count = 0;
  std::vector<long> orbit_sizes;               // indexed by orbit id
  std::vector<long> orbit_of_cusp;             // orbit id for each enumerated cusp, -1 if unmatched
  bool labels_bijective = false;
};
OrbitOracle orbit_oracle(long N);

}  // namespace eisen

#endif
