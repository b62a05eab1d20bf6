#ifndef EISEN_CONSTANT_TERM_HPP
#define EISEN_CONSTANT_TERM_HPP

#include "eisen/phi.hpp"

namespace eisen {

// M = gamma * [[A, B], [0, D]] with gamma unimodular, A D = det M, D > 0
// and 0 <= B < D. The choice is canonical so downstream values are
// reproducible bit for bit.
struct HermiteFactor {
  Mat2 gamma;
  Int A, B, D;
};
HermiteFactor hermite_left(const Mat2& m);

// Constant Fourier coefficient of E | sigma_c. Each scaled term is pushed
// through the factorization  [e 0; 0 1] sigma = gamma' [A B; 0 D]  and
// contributes coef (A/D) B2((x gamma')_1) / 2. A nonzero aggregate of the
// non-holomorphic riders is a hard error.
CycNum constant_term(const PhiVector& E, const Cusp& c);

// width-weighted constant terms over all cusps of the level
struct CuspDivisor {
  long level = 1;
  std::vector<Cusp> cusps;
  std::vector<CycNum> coeff;  // e_x * a_0(E; [x]) per cusp
  CycNum total(long ring) const;
};
CuspDivisor delta_divisor(const PhiVector& E, long N);
CuspDivisor delta_divisor_serial(const PhiVector& E, long N);

}  // namespace eisen

#endif
