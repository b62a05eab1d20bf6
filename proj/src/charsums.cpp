#include "eisen/charsums.hpp"

#include <stdexcept>

namespace eisen {

CycNum gauss_sum(const DirichletCharacter& chi, long ring) {
  if (chi.conductor() != chi.modulus())
    throw std::domain_error("gauss_sum: character must be primitive");
  long f = chi.modulus();
  if (ring % f != 0 || ring % chi.order() != 0)
    throw std::domain_error("gauss_sum: ring too small");
  CycNum g = CycNum::zero(ring);
  for (long t = 0; t < f; ++t) {
    auto k = chi.value_index(Int(t));
    if (!k) continue;
    g += CycNum::unit_phase(ring, *k, chi.order()) * CycNum::unit_phase(ring, t, f);
  }
  return g;
}

CycNum gauss_sum(const DirichletCharacter& chi) { return gauss_sum(chi, gauss_ring(chi)); }

CycNum gen_bernoulli1(const DirichletCharacter& chi, long ring) {
  if (chi.is_trivial())
    throw std::domain_error("gen_bernoulli1: trivial character rejected");
  if (chi.conductor() != chi.modulus())
    throw std::domain_error("gen_bernoulli1: character must be primitive");
  long f = chi.modulus();
  CycNum b = CycNum::zero(ring);
  for (long a = 1; a <= f; ++a) {
    auto k = chi.value_index(Int(a));
    if (!k) continue;
    b.addmul(Rat(a, f), CycNum::unit_phase(ring, *k, chi.order()));
  }
  return b;
}

CycNum gen_bernoulli1(const DirichletCharacter& chi) {
  return gen_bernoulli1(chi, chi.order());
}

CycNum series_constant(const DirichletCharacter& chi, long ring) {
  if (chi.conductor() != chi.modulus())
    throw std::domain_error("series_constant: character must be primitive");
  long f = chi.modulus();
  if (ring % gauss_ring(chi) != 0)
    throw std::domain_error("series_constant: ring too small");
  CycNum s = CycNum::zero(ring);
  for (long a = 0; a < f; ++a) {
    auto ka = chi.value_index(Int(a));
    if (!ka) continue;
    for (long b = 0; b < f; ++b) {
      auto kb = chi.value_index(Int(b));
      if (!kb) continue;
      long kk = (*ka + *kb) % chi.order();
      s.addmul(bernoulli2(Rat(a + b, f)), CycNum::unit_phase(ring, kk, chi.order()));
    }
  }
  // 1/g(chi) = chi(-1) g(chibar) / f
  CycNum ginv = gauss_sum(chi.inverse(), ring) * Rat(chi.parity(), f);
  return s * ginv * Rat(-f, 4);
}

}  // namespace eisen
