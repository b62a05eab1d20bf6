#include <doctest.h>

#include <set>

#include "eisen/cusps.hpp"

using namespace eisen;

TEST_CASE("cusp counts at small levels") {
  CHECK(enumerate_cusps(1).size() == 1);
  CHECK(enumerate_cusps(11).size() == 2);

  auto c9 = enumerate_cusps(9);
  REQUIRE(c9.size() == 4);
  std::multiset<long> ds;
  for (const Cusp& c : c9) ds.insert(c.d);
  CHECK(ds == std::multiset<long>({1, 3, 3, 9}));
}

TEST_CASE("prime level widths and orientation") {
  auto c11 = enumerate_cusps(11);
  REQUIRE(c11.size() == 2);
  CHECK(c11[0].d == 1);
  CHECK(c11[0].width == 1);
  CHECK(c11[1].d == 11);
  CHECK(c11[1].width == 11);
}

TEST_CASE("widths at level 9") {
  for (const Cusp& c : enumerate_cusps(9)) {
    if (c.d == 3) CHECK(c.width == 1);
    if (c.d == 1) CHECK(c.width == 1);
    if (c.d == 9) CHECK(c.width == 9);
  }
}

TEST_CASE("sigma really is a completion") {
  for (long N : {1L, 9L, 11L, 45L, 75L, 99L}) {
    for (const Cusp& c : enumerate_cusps(N)) {
      CHECK(mat2_det(c.sigma) == 1);
      CHECK(c.sigma[0][0] == c.x);
      CHECK(c.sigma[1][0] == N / c.d);
      CHECK(lgcd(c.x, N) == 1);
      CHECK(c.field_conductor == lgcd(c.d, N / c.d));
    }
  }
}

TEST_CASE("representative lifting kicks in when the small residue shares a factor") {
  // at N = 75, d = 15 the class 3 mod 5 has no representative in [1,5]
  // coprime to 75
  bool found = false;
  for (const Cusp& c : enumerate_cusps(75)) {
    if (c.d != 15) continue;
    if (c.x % 5 == 3) {
      found = true;
      CHECK(c.x == 8);
    }
  }
  CHECK(found);
}

TEST_CASE("widths sum to the index and the oracle agrees, small sweep") {
  for (long N = 1; N <= 60; ++N) {
    auto cusps = enumerate_cusps(N);
    long total = 0;
    for (const Cusp& c : cusps) total += c.width;
    CHECK(total == psi_index(N));

    OrbitOracle o = orbit_oracle(N);
    CHECK(o.count == static_cast<long>(cusps.size()));
    CHECK(o.labels_bijective);
    for (size_t i = 0; i < cusps.size(); ++i)
      CHECK(o.orbit_sizes[o.orbit_of_cusp[i]] == cusps[i].width);
  }
}

TEST_CASE("cusps with coprime d and N/d are rational") {
  for (const Cusp& c : enumerate_cusps(45))
    CHECK(c.rational() == (lgcd(c.d, 45 / c.d) == 1));
}
