#include <doctest.h>

#include "eisen/qexp.hpp"

using namespace eisen;

namespace {

QExpansion random_series(long level, long nmax, unsigned long seed) {
  QExpansion g(level, 1, nmax, 1);
  for (long i = 0; i <= nmax; ++i) {
    seed = seed * 6364136223846793005ull + 1442695040888963407ull;
    g.coeff_index(i) = CycNum::from_rat(1, Rat(static_cast<long>(seed % 41) - 20));
  }
  return g;
}

}  // namespace

TEST_CASE("gamma_scale moves a single monomial") {
  QExpansion g(1, 1, 10, 1);
  g.coeff_index(1) = CycNum::one(1);  // g = q
  QExpansion h = gamma_scale(g, 5);
  CHECK(h.level() == 5);
  CHECK(h.coeff_index(5).to_rat() == Rat(5));
  for (long i = 0; i <= h.nmax(); ++i)
    if (i != 5) CHECK(h.coeff_index(i).is_zero());
}

TEST_CASE("degeneracy reindexes and U_p inverts it") {
  QExpansion g = random_series(7, 60, 5);
  QExpansion gp = degeneracy(5, g);
  CHECK(gp.coeff_index(10) == g.coeff_index(2));
  CHECK(gp.coeff_index(11).is_zero());
  QExpansion back = hecke(35, 5, gp);
  CHECK(QExpansion::agree(back, g));
  CHECK(QExpansion::agree(degeneracy(1, g), g));
}

TEST_CASE("hecke at a coprime prime") {
  QExpansion g = random_series(1, 60, 17);
  QExpansion t = hecke(7, 3, g);  // 3 coprime to 7
  for (long n = 0; n <= t.nmax(); ++n) {
    CycNum want = g.coeff_index(3 * n);
    if (n % 3 == 0) want += g.coeff_index(n / 3) * Rat(3);
    CHECK(t.coeff_index(n) == want);
  }
}

TEST_CASE("hecke precision floor") {
  QExpansion g = random_series(1, 20, 3);
  CHECK_THROWS_AS(hecke(7, 3, g, 10), PrecisionError);
}

TEST_CASE("hecke operators commute") {
  QExpansion g = random_series(1, 210, 23);
  QExpansion ab = hecke(1, 2, hecke(1, 3, g));
  QExpansion ba = hecke(1, 3, hecke(1, 2, g));
  CHECK(QExpansion::agree(ab, ba));
}

TEST_CASE("raising and lowering operators commute") {
  DirichletCharacter chi = DirichletCharacter::legendre(3);
  QExpansion g(9, 1, 120, 2);
  unsigned long seed = 7;
  for (long i = 0; i <= 120; ++i) {
    seed = seed * 6364136223846793005ull + 1442695040888963407ull;
    g.coeff_index(i) = CycNum::from_rat(2, Rat(static_cast<long>(seed % 19) - 9));
  }
  QExpansion a = op_plus(chi, 5, op_minus(chi, 7, g));
  QExpansion b = op_minus(chi, 7, op_plus(chi, 5, g));
  CHECK(QExpansion::agree(a, b));
  CHECK_THROWS_AS(op_plus(chi, 3, g), std::domain_error);
  CHECK_THROWS_AS(op_minus(chi, 3, g), std::domain_error);
}

TEST_CASE("U_p on a level-raised series splits into Hecke and shift parts") {
  // for g of level prime to p: U_p g = T_p g - p g(pz), coefficientwise
  for (long p : {3L, 5L}) {
    QExpansion g = random_series(7, 30 * p, 99);
    long N = 7 * p;
    QExpansion lifted = g;
    lifted.set_level(N);
    QExpansion up = hecke(N, p, lifted);
    QExpansion tp = hecke(7, p, g);
    QExpansion shifted = degeneracy(p, g) * Rat(p);
    for (long n = 0; n <= up.nmax(); ++n)
      CHECK(up.coeff_index(n) == tp.coeff_index(n) - shifted.coeff_index(n));
  }
}

TEST_CASE("U_p agrees across levels once p is in both") {
  QExpansion g = random_series(3, 60, 4);
  QExpansion a = hecke(3, 3, g);
  QExpansion b = hecke(9, 3, g);
  CHECK(QExpansion::agree(a, b));
}

TEST_CASE("quadratic relation annihilates old series") {
  // a pure reindexing identity, so it holds for arbitrary coefficient
  // sequences of level prime to p
  for (long p : {3L, 5L}) {
    for (unsigned long seed : {11ull, 12ull}) {
      QExpansion g = random_series(7, 40 * p * p, seed);
      CHECK(oldform_quadratic_check(g, p, 40));
    }
  }
  QExpansion short_series = random_series(7, 30, 1);
  CHECK_THROWS_AS(oldform_quadratic_check(short_series, 3, 40), PrecisionError);
  QExpansion bad_level = random_series(3, 400, 1);
  CHECK_THROWS_AS(oldform_quadratic_check(bad_level, 3, 5), std::domain_error);
}

TEST_CASE("with_den detects coefficients off the coarse grid") {
  QExpansion g(1, 3, 9, 1);
  g.coeff_index(3) = CycNum::one(1);
  g.coeff_index(6) = CycNum::from_rat(1, Rat(2));
  auto ok = g.with_den(1);
  REQUIRE(ok.has_value());
  CHECK(ok->coeff_index(1).to_rat() == Rat(1));
  CHECK(ok->coeff_index(2).to_rat() == Rat(2));
  g.coeff_index(4) = CycNum::one(1);  // exponent 4/3 has no integral home
  CHECK(!g.with_den(1).has_value());
  CHECK(!g.with_den(2).has_value());
}

TEST_CASE("sigma_chi values") {
  DirichletCharacter triv = DirichletCharacter::trivial(1);
  CHECK(sigma_chi(triv, 1, 1).to_rat() == Rat(1));
  CHECK(sigma_chi(triv, 6, 1).to_rat() == Rat(12));

  DirichletCharacter quad3 = DirichletCharacter::legendre(3);
  CHECK(sigma_chi(quad3, 1, 2).to_rat() == Rat(1));
  CHECK(sigma_chi(quad3, 2, 2).to_rat() == Rat(-3));
}
