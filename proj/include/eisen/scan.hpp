#ifndef EISEN_SCAN_HPP
#define EISEN_SCAN_HPP

#include <optional>
#include <string>

#include "eisen/orders.hpp"

namespace eisen {

// A series shape admissible at level N: primitive chi with conductor^2
// dividing N, squarefree mbar, lbar coprime to the conductor with
// conductor^2 mbar lbar | N, and conductor * mbar > 1.
struct AdmissibleConfig {
  DirichletCharacter chi;
  long chi_index = 0;  // position among the primitive characters of this conductor
  long mbar = 1, lbar = 1;
  long M() const { return chi.conductor() * mbar; }
  long L() const { return chi.conductor() * lbar; }
  long series_level() const { return chi.conductor() * chi.conductor() * mbar * lbar; }
};

// rejects even N: the whole pipeline assumes odd levels
std::vector<AdmissibleConfig> enumerate_admissible(long N);

struct ScanConfig {
  long level = 0;
  long precision = 200;
  long prime_bound = 50;
  std::string format = "json";
  std::string out_path;
  int jobs = 0;  // 0 = library default
  std::optional<long> chi_conductor;
  std::optional<long> chi_index;
};

struct EigenStatus {
  long ell = 0;
  std::string branch;  // coprime | m-part | l-part | common | skipped-old
  bool checked = false;
  bool pass = false;
};

struct CuspidalReport {
  long level = 0;
  long chi_conductor = 1;
  long chi_index = 0;
  long chi_order = 1;
  std::vector<long> chi_exponents;
  long mbar = 1, lbar = 1;
  long series_level = 1;
  CuspDivisor divisor;
  std::vector<CycNum> ideal_gens;
  Int cusp_order = 1;
  Int lattice_order = 1;  // the period-lattice route
  std::vector<Int> eisenstein_primes;
  std::vector<EigenStatus> eigen;
  bool residue_zero = false;
  bool constant_two_path = false;
  bool orders_match = false;
  std::string error;
  double seconds = 0.0;

  bool all_checks_pass() const;
};

CuspidalReport run_config(long N, const AdmissibleConfig& cfg, long precision, long prime_bound);
std::vector<CuspidalReport> scan(const ScanConfig& cfg);

// eigenvalue of the level-N Hecke operator on the series, when the
// configuration pins one; nullopt marks an old prime outside the table
std::optional<CycNum> predicted_eigenvalue(const AdmissibleConfig& cfg, long N, long ell,
                                           long ring, std::string* branch);

// runs the four-case eigenvalue check for every prime up to the bound;
// primes dividing N but not the series level are reported unchecked
std::vector<EigenStatus> eigen_table_check(const AdmissibleConfig& cfg, const EisensteinSeries& E,
                                           long N, long ell_bound);

}  // namespace eisen

#endif
