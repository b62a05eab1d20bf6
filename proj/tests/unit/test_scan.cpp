#include <doctest.h>

#include <nlohmann/json.hpp>
#include <set>

#include "eisen/report_io.hpp"

using namespace eisen;

TEST_CASE("admissible configurations at small levels") {
  // level 11: only the trivial character with mbar = 11 survives; the
  // (11,11) shape would need 11^2 dividing the level
  auto c11 = enumerate_admissible(11);
  REQUIRE(c11.size() == 1);
  CHECK(c11[0].chi.is_trivial());
  CHECK(c11[0].mbar == 11);
  CHECK(c11[0].lbar == 1);

  // level 9: trivial chi with (3,1), (3,3) and the quadratic character
  // mod 3 with (1,1)
  auto c9 = enumerate_admissible(9);
  std::set<std::tuple<long, long, long>> shapes;
  for (const auto& c : c9) shapes.insert({c.chi.conductor(), c.mbar, c.lbar});
  CHECK(shapes == std::set<std::tuple<long, long, long>>(
                      {{1, 3, 1}, {1, 3, 3}, {3, 1, 1}}));

  // level 15: five shapes for the trivial character
  auto c15 = enumerate_admissible(15);
  CHECK(c15.size() == 5);
  for (const auto& c : c15) {
    CHECK(c.chi.is_trivial());
    CHECK(c.series_level() % 1 == 0);
    CHECK(15 % c.series_level() == 0);
    CHECK(c.M() > 1);
  }

  CHECK_THROWS_AS(enumerate_admissible(12), std::domain_error);
}

TEST_CASE("every admissible configuration appears exactly once") {
  for (long N : {9L, 45L, 99L}) {
    auto cfgs = enumerate_admissible(N);
    std::set<std::tuple<long, long, long, long>> seen;
    for (const auto& c : cfgs) {
      CHECK(is_squarefree(c.mbar));
      CHECK(is_squarefree(c.lbar));
      CHECK(lgcd(c.mbar * c.lbar, c.chi.conductor()) == 1);
      CHECK(N % c.series_level() == 0);
      CHECK(c.M() > 1);
      auto key = std::make_tuple(c.chi.conductor(), c.chi_index, c.mbar, c.lbar);
      CHECK(!seen.count(key));
      seen.insert(key);
    }
  }
}

TEST_CASE("scan of level 11 finds the order-five group") {
  ScanConfig cfg;
  cfg.level = 11;
  cfg.precision = 120;
  cfg.prime_bound = 20;
  auto reports = scan(cfg);
  REQUIRE(reports.size() == 1);
  const CuspidalReport& r = reports[0];
  CHECK(r.error.empty());
  CHECK(r.cusp_order == 5);
  CHECK(r.lattice_order == 5);
  REQUIRE(r.eisenstein_primes.size() == 1);
  CHECK(r.eisenstein_primes[0] == 5);
  CHECK(r.residue_zero);
  CHECK(r.constant_two_path);
  CHECK(r.orders_match);
  for (const auto& e : r.eigen) {
    CHECK(e.checked);
    CHECK(e.pass);
  }
  CHECK(r.all_checks_pass());
}

TEST_CASE("scan rejects bad configs") {
  ScanConfig even;
  even.level = 12;
  even.precision = 100;
  even.prime_bound = 10;
  CHECK_THROWS_AS(scan(even), std::domain_error);

  ScanConfig shallow;
  shallow.level = 11;
  shallow.precision = 30;
  shallow.prime_bound = 20;
  CHECK_THROWS_AS(scan(shallow), std::domain_error);
}

TEST_CASE("scan output is deterministic and round-trips through json") {
  ScanConfig cfg;
  cfg.level = 9;
  cfg.precision = 60;
  cfg.prime_bound = 10;
  auto r1 = scan(cfg);
  auto r2 = scan(cfg);
  std::string s1 = render_scan_json(cfg, r1);
  std::string s2 = render_scan_json(cfg, r2);
  CHECK(s1 == s2);

  Json doc = Json::parse(s1);
  REQUIRE(doc.at("reports").size() == r1.size());
  for (size_t i = 0; i < r1.size(); ++i) {
    CuspidalReport back = report_from_json(doc.at("reports").at(i));
    CHECK(back.cusp_order == r1[i].cusp_order);
    CHECK(back.lattice_order == r1[i].lattice_order);
    CHECK(back.chi_conductor == r1[i].chi_conductor);
    CHECK(back.eisenstein_primes == r1[i].eisenstein_primes);
    REQUIRE(back.divisor.coeff.size() == r1[i].divisor.coeff.size());
    for (size_t j = 0; j < back.divisor.coeff.size(); ++j)
      CHECK(back.divisor.coeff[j] == r1[i].divisor.coeff[j]);
  }

  std::string csv = render_scan_csv(cfg, r1);
  CHECK(csv.find("summary,9,") != std::string::npos);
}

TEST_CASE("parallel jobs do not change the rendered output") {
  ScanConfig one;
  one.level = 45;
  one.precision = 60;
  one.prime_bound = 10;
  one.jobs = 1;
  ScanConfig many = one;
  many.jobs = 4;
  std::string a = render_scan_json(one, scan(one));
  std::string b = render_scan_json(many, scan(many));
  CHECK(a == b);
}

TEST_CASE("emit failures carry the path") {
  ScanConfig cfg;
  cfg.level = 11;
  cfg.precision = 60;
  cfg.prime_bound = 10;
  cfg.out_path = "/nonexistent-dir/report.json";
  auto reports = scan(cfg);
  try {
    emit(cfg, reports);
    CHECK(false);
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("/nonexistent-dir/report.json") != std::string::npos);
  }
}

TEST_CASE("empty report list renders a valid document") {
  ScanConfig cfg;
  cfg.level = 11;
  cfg.precision = 100;
  cfg.prime_bound = 20;
  cfg.chi_conductor = 99;  // matches nothing
  auto reports = scan(cfg);
  CHECK(reports.empty());
  Json doc = Json::parse(render_scan_json(cfg, reports));
  CHECK(doc.at("reports").empty());
}

TEST_CASE("level 3 strips everything and reports no primes") {
  ScanConfig cfg;
  cfg.level = 3;
  cfg.precision = 60;
  cfg.prime_bound = 10;
  auto reports = scan(cfg);
  REQUIRE(!reports.empty());
  for (const auto& r : reports) {
    CHECK(r.error.empty());
    CHECK(r.eisenstein_primes.empty());
    CHECK(r.cusp_order == 1);
  }
}

TEST_CASE("eisenstein primes divide the order and avoid 6N") {
  for (long N : {9L, 15L, 33L}) {
    ScanConfig cfg;
    cfg.level = N;
    cfg.precision = 60;
    cfg.prime_bound = 10;
    for (const auto& r : scan(cfg)) {
      for (const Int& p : r.eisenstein_primes) {
        CHECK(r.cusp_order % p == 0);
        CHECK((Int(6) * N) % p != 0);
      }
    }
  }
}
