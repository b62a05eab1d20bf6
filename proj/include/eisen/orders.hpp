#ifndef EISEN_ORDERS_HPP
#define EISEN_ORDERS_HPP

#include "eisen/charsums.hpp"
#include "eisen/constant_term.hpp"
#include "eisen/lattice.hpp"

namespace eisen {

// Divisor coefficients rescaled by 1/g(chibar) so they land in the value
// ring Z[chi][1/6N]; the rescaling is by a unit away from 6N, so indices
// away from 6N are unchanged. Failure to land in Q(zeta_ord) is a hard
// error (it would mean a Gauss-sum denominator leaked).
std::vector<CycNum> normalized_divisor_values(const EisensteinSeries& E, const CuspDivisor& div);

struct OrderData {
  Int order = 1;                    // prime-to-6N part of the ideal index
  std::vector<CycNum> ideal_gens;   // normalized divisor values in Z[chi][1/6N]
  std::vector<Int> inverted;        // primes of 6N
};

// |Z[1/6N, chi] / a| with a generated by the width-weighted constant terms,
// computed as a lattice index in the order Z[zeta_ord(chi)]
OrderData cuspidal_order(const EisensteinSeries& E, long N);
OrderData cuspidal_order(const EisensteinSeries& E, const CuspDivisor& div);

// prime-to-6N part of [P : R] with R the span of the divisor values and
// P = (g(chi^{-1})/L) Z[chi] + R; agreement with cuspidal_order is the
// consistency theorem checked by the test suite, not assumed
Int period_order(const EisensteinSeries& E, long N);
Int period_order(const EisensteinSeries& E, const CuspDivisor& div);

// The finite closed form of the plus/minus special value attached to an
// auxiliary character eta of prime conductor coprime to the level:
//   sign * etat(-1) chi(f_etat)^{-1} etat(f_chi) (g(chi^{-1})/L)
//        * (B_{1,conj(chi^{-1} etat)}/2) (B_{1,chi etat}/2)
//        * prod_{p | lbar} (p - chi(p)^{-1} etat(p))
//        * prod_{p | mbar} (1 - chi(p) etat(p))
// where etat is eta or its quadratic twist, whichever makes chi etat odd.
CycNum lambda_value(const EisensteinSeries& E, const EtaCharacter& eta, int sign, long N);

}  // namespace eisen

#endif
