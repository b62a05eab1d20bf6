#include "eisen/orders.hpp"

#include <stdexcept>

namespace eisen {

namespace {

std::vector<Int> primes_of_6N(long N) {
  std::vector<Int> ps = {Int(2), Int(3)};
  for (long p : prime_factors(N))
    if (p != 2 && p != 3) ps.push_back(Int(p));
  return ps;
}

}  // namespace

std::vector<CycNum> normalized_divisor_values(const EisensteinSeries& E, const CuspDivisor& div) {
  long ring = E.ring;
  long n = E.chi.order();
  // 1/g(chibar) = chi(-1) g(chi) / f  (empty-sum convention g = 1 for f = 1)
  CycNum ginv;
  if (E.chi.conductor() == 1) {
    ginv = CycNum::one(ring);
  } else {
    ginv = gauss_sum(E.chi, ring) * Rat(E.chi.parity(), E.chi.conductor());
  }
  std::vector<CycNum> vals;
  vals.reserve(div.coeff.size());
  for (const CycNum& c : div.coeff) {
    CycNum w = c * ginv;
    auto down = w.coerce(n);
    if (!down)
      throw std::domain_error("normalized divisor value does not lie in the character value ring");
    vals.push_back(*down);
  }
  return vals;
}

OrderData cuspidal_order(const EisensteinSeries& E, const CuspDivisor& div) {
  long n = E.chi.order();
  long rank = CycRing::get(n).degree();
  OrderData data;
  data.ideal_gens = normalized_divisor_values(E, div);
  data.inverted = primes_of_6N(div.level);
  Lattice lat;
  lat.rank = rank;
  lat.inverted_primes = data.inverted;
  for (const CycNum& v : data.ideal_gens) {
    if (v.is_zero()) continue;
    for (long j = 0; j < rank; ++j) {
      CycNum g = v * CycNum::root(n, j);
      lat.generators.push_back(g.coeffs());
    }
  }
  data.order = lattice_index(lat);
  return data;
}

OrderData cuspidal_order(const EisensteinSeries& E, long N) {
  return cuspidal_order(E, delta_divisor(E.phi, N));
}

Int period_order(const EisensteinSeries& E, const CuspDivisor& div) {
  long n = E.chi.order();
  long rank = CycRing::get(n).degree();
  std::vector<CycNum> vals = normalized_divisor_values(E, div);
  std::vector<std::vector<Rat>> rgens;
  for (const CycNum& v : vals)
    if (!v.is_zero()) rgens.push_back(v.coeffs());
  Rat fr_r = fractional_index(rgens, rank);
  // P = (1/L) Z[chi] + R after the same 1/g(chibar) normalization
  long L = E.chi.conductor() * E.lbar;
  std::vector<std::vector<Rat>> pgens = rgens;
  for (long j = 0; j < rank; ++j) {
    std::vector<Rat> row(rank, Rat(0));
    row[j] = Rat(1, L);
    pgens.push_back(std::move(row));
  }
  Rat fr_p = fractional_index(pgens, rank);
  Rat ratio = fr_r / fr_p;
  Rat stripped = strip_primes(ratio, primes_of_6N(div.level));
  if (denominator(stripped) != 1)
    throw std::domain_error("period_order: period lattice does not contain the residue span away from 6N");
  return numerator(stripped);
}

Int period_order(const EisensteinSeries& E, long N) {
  return period_order(E, delta_divisor(E.phi, N));
}

CycNum lambda_value(const EisensteinSeries& E, const EtaCharacter& eta, int sign, long N) {
  const DirichletCharacter& chi = E.chi;
  long f = chi.conductor();
  long p_eta = eta.eta.conductor();
  if (lgcd(p_eta, N) != 1 || lgcd(p_eta, f) != 1)
    throw std::domain_error("lambda_value: auxiliary conductor shares a factor with the level");
  // choose the twist making chi * eta odd
  int chi_eta_parity = chi.parity() * eta.eta.parity();
  const DirichletCharacter& etat = (chi_eta_parity == -1) ? eta.eta : eta.legendre_twist;

  DirichletCharacter chi_etat = multiply_coprime(chi, etat).primitive_part();
  DirichletCharacter conj_chi_inv_etat = multiply_coprime(chi, etat.inverse()).primitive_part();
  if (chi_etat.parity() != -1)
    throw std::logic_error("lambda_value: twisted character is not odd");

  long ring = llcm(llcm(series_ring(chi), llcm(chi.order(), etat.order())),
                   llcm(gauss_ring(chi), llcm(chi_etat.order(), conj_chi_inv_etat.order())));

  long L = f * E.lbar;
  CycNum value = CycNum::one(ring);
  if (etat.parity() == -1) value *= Rat(-1);
  value *= chi.value_inv(Int(p_eta), ring);
  value *= etat.value(Int(f), ring);
  CycNum g_inv_chi = (f == 1) ? CycNum::one(ring) : gauss_sum(chi.inverse(), ring);
  value *= g_inv_chi * Rat(1, L);
  value *= gen_bernoulli1(conj_chi_inv_etat, ring) * Rat(1, 2);
  value *= gen_bernoulli1(chi_etat, ring) * Rat(1, 2);
  for (long p : prime_factors(E.lbar))
    value *= CycNum::from_rat(ring, Rat(p)) - chi.value_inv(Int(p), ring) * etat.value(Int(p), ring);
  for (long p : prime_factors(E.mbar))
    value *= CycNum::one(ring) - chi.value(Int(p), ring) * etat.value(Int(p), ring);
  if (sign < 0) value *= Rat(-1);
  return value;
}

}  // namespace eisen
