#ifndef EISEN_CHARSUMS_HPP
#define EISEN_CHARSUMS_HPP

#include "eisen/characters.hpp"

namespace eisen {

// smallest ring containing the values of chi and the phases e(t/f)
inline long gauss_ring(const DirichletCharacter& chi) {
  return llcm(chi.conductor(), chi.order());
}

// g(chi) = sum_{t mod f} chi(t) e(t/f), chi primitive of conductor f.
// Satisfies g(chi) g(chibar) = chi(-1) f.
CycNum gauss_sum(const DirichletCharacter& chi, long ring);
CycNum gauss_sum(const DirichletCharacter& chi);

// B_{1,chi} = (1/f) sum_{a=1..f} chi(a) a, chi primitive and non-trivial.
// Vanishes for even chi.
CycNum gen_bernoulli1(const DirichletCharacter& chi, long ring);
CycNum gen_bernoulli1(const DirichletCharacter& chi);

// n_chi = -(f / 4 g(chi)) sum_{a,b mod f} chi(a) chi(b) B2((a+b)/f); the
// common constant-term value on the conductor stratum of cusps.
CycNum series_constant(const DirichletCharacter& chi, long ring);

}  // namespace eisen

#endif
