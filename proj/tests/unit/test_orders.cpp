#include <doctest.h>

#include <algorithm>

#include "eisen/orders.hpp"
#include "eisen/scan.hpp"

using namespace eisen;

namespace {

// Hand route for prime level p, trivial character: the series is
// E(z) - p E(pz), its two width-weighted constant terms are +-(p-1)/24 by
// the modular invariance of the level-one series, and the ideal is the
// rank-one lattice they span. No Hermite reduction involved.
Int prime_level_order_oracle(long p) {
  Rat v = Rat(p - 1, 24);
  Lattice L;
  L.rank = 1;
  L.generators = {{v}, {-v}};
  L.inverted_primes = {Int(2), Int(3), Int(p)};
  return lattice_index(L);
}

}  // namespace

TEST_CASE("prime level orders, pipeline against the hand oracle") {
  DirichletCharacter triv = DirichletCharacter::trivial(1);
  for (long p : {11L, 37L, 67L, 73L}) {
    EisensteinSeries E = build_series(triv, p, 1, 10);
    OrderData od = cuspidal_order(E, p);
    CHECK(od.order == prime_level_order_oracle(p));
    CHECK(period_order(E, p) == od.order);
  }
  // frozen oracle values: stripping everything at 6N leaves these
  CHECK(prime_level_order_oracle(11) == 5);
  CHECK(prime_level_order_oracle(37) == 1);
  CHECK(prime_level_order_oracle(67) == 11);
  CHECK(prime_level_order_oracle(73) == 1);
}

TEST_CASE("quadratic character at level 9") {
  DirichletCharacter quad3 = DirichletCharacter::legendre(3);
  EisensteinSeries E = build_series(quad3, 1, 1, 10);
  OrderData od = cuspidal_order(E, 9);
  CHECK(od.order == 1);
  CHECK(period_order(E, 9) == 1);
}

TEST_CASE("orders agree across every admissible configuration at small levels") {
  // level 75 brings order-4 characters together with a nontrivial raising
  // part, so the value ring has rank two there
  for (long N : {9L, 15L, 25L, 75L}) {
    for (const AdmissibleConfig& cfg : enumerate_admissible(N)) {
      EisensteinSeries E = build_series(cfg.chi, cfg.mbar, cfg.lbar, 10);
      CuspDivisor div = delta_divisor(E.phi, N);
      OrderData od = cuspidal_order(E, div);
      CHECK(od.order == period_order(E, div));
      CHECK(div.total(E.ring).is_zero());
    }
  }
}

TEST_CASE("normalized divisor values land in the character value ring") {
  for (const auto& chi : primitive_characters(5)) {
    EisensteinSeries E = build_series(chi, 1, 1, 10);
    CuspDivisor div = delta_divisor(E.phi, 25);
    std::vector<CycNum> vals = normalized_divisor_values(E, div);
    for (const CycNum& v : vals) CHECK(v.ring() == chi.order());
  }
}

TEST_CASE("special value formula: independent factor-by-factor recomputation") {
  DirichletCharacter triv = DirichletCharacter::trivial(1);
  EisensteinSeries E = build_series(triv, 11, 1, 10);
  auto etas = enumerate_eta(11, 50);
  REQUIRE(!etas.empty());
  const EtaCharacter& eta = etas[0];

  CycNum got = lambda_value(E, eta, +1, 11);

  // recompute every factor directly for the trivial character shape
  const DirichletCharacter& etat =
      (triv.parity() * eta.eta.parity() == -1) ? eta.eta : eta.legendre_twist;
  long ring = got.ring();
  // B1 of etat^{-1} and etat by the defining sums
  auto b1_direct = [&](const DirichletCharacter& theta) {
    CycNum s = CycNum::zero(ring);
    for (long a = 1; a <= theta.modulus(); ++a) {
      auto k = theta.value_index(Int(a));
      if (!k) continue;
      s.addmul(Rat(a, theta.modulus()), CycNum::unit_phase(ring, *k, theta.order()));
    }
    return s;
  };
  CycNum want = CycNum::one(ring);
  if (etat.parity() == -1) want *= Rat(-1);
  want *= b1_direct(etat.inverse()) * Rat(1, 2);
  want *= b1_direct(etat) * Rat(1, 2);
  want *= CycNum::from_rat(ring, Rat(1)) - etat.value(Int(11), ring);
  CHECK(got == want);
  CHECK(lambda_value(E, eta, -1, 11) == -got);

  // conductor sharing a factor with the level is rejected
  EisensteinSeries E3 = build_series(triv, 3, 1, 10);
  auto etas3 = enumerate_eta(1, 10);
  bool rejected = false;
  for (const auto& e3 : etas3) {
    if (e3.eta.conductor() == 3) {
      try {
        lambda_value(E3, e3, +1, 3);
      } catch (const std::domain_error&) {
        rejected = true;
      }
    }
  }
  (void)rejected;  // conductor 3 never appears: mod 3 has no non-quadratic character
  CHECK_THROWS_AS(lambda_value(E3, etas3[0], +1, 21), std::domain_error);
}

TEST_CASE("the rejected member of each twist pair has a vanishing Bernoulli factor") {
  // the parity rule picks the twist making chi etat odd; the partner is
  // even, so its Bernoulli factor annihilates the corresponding product
  DirichletCharacter quad3 = DirichletCharacter::legendre(3);
  auto etas = enumerate_eta(9, 120);
  REQUIRE(!etas.empty());
  for (size_t i = 0; i < std::min<size_t>(etas.size(), 6); ++i) {
    const auto& eta = etas[i];
    bool eta_is_odd_twist = (quad3.parity() * eta.eta.parity() == -1);
    const DirichletCharacter& partner = eta_is_odd_twist ? eta.legendre_twist : eta.eta;
    DirichletCharacter even_product = multiply_coprime(quad3, partner).primitive_part();
    CHECK(even_product.parity() == 1);
    CHECK(gen_bernoulli1(even_product).is_zero());
  }
}

TEST_CASE("special value denominators stay inside 6 N p_eta") {
  DirichletCharacter triv = DirichletCharacter::trivial(1);
  EisensteinSeries E = build_series(triv, 11, 11, 10);
  auto etas = enumerate_eta(11, 50);
  for (int i : {0, 3, 7}) {
    CycNum v = lambda_value(E, etas[i], +1, 11);
    for (const Int& p : v.denominator_primes()) {
      bool ok = (Int(6) * 11 * etas[i].eta.conductor()) % p == 0;
      CHECK(ok);
    }
  }
}
