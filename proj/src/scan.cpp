#include "eisen/scan.hpp"

#include <chrono>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eisen {

std::vector<AdmissibleConfig> enumerate_admissible(long N) {
  if (N < 1) throw std::domain_error("enumerate_admissible: level must be positive");
  if (N % 2 == 0) throw std::domain_error("enumerate_admissible: level must be odd");
  std::vector<AdmissibleConfig> out;
  for (long f : divisors(N)) {
    if ((N / f) % f != 0) continue;  // need f^2 | N
    long rest = N / (f * f);
    std::vector<DirichletCharacter> prims = primitive_characters(f);
    for (size_t ci = 0; ci < prims.size(); ++ci) {
      for (long mbar : divisors(rest)) {
        if (!is_squarefree(mbar) || lgcd(mbar, f) != 1) continue;
        if (f * mbar <= 1) continue;
        for (long lbar : divisors(rest / mbar)) {
          if (!is_squarefree(lbar) || lgcd(lbar, f) != 1) continue;
          AdmissibleConfig cfg{prims[ci], static_cast<long>(ci), mbar, lbar};
          out.push_back(std::move(cfg));
        }
      }
    }
  }
  return out;
}

std::optional<CycNum> predicted_eigenvalue(const AdmissibleConfig& cfg, long N, long ell,
                                           long ring, std::string* branch) {
  const DirichletCharacter& chi = cfg.chi;
  long M = cfg.M(), L = cfg.L();
  long G = lgcd(M, L);
  if (N % ell != 0) {
    if (branch) *branch = "coprime";
    return chi.value_inv(Int(ell), ring) + chi.value(Int(ell), ring) * Rat(ell);
  }
  if ((M / G) % ell == 0) {
    if (branch) *branch = "m-part";
    return chi.value_inv(Int(ell), ring);
  }
  if ((L / G) % ell == 0) {
    if (branch) *branch = "l-part";
    return chi.value(Int(ell), ring) * Rat(ell);
  }
  if (G % ell == 0) {
    if (branch) *branch = "common";
    return CycNum::zero(ring);
  }
  // ell divides the level but not the series level: the series is old at
  // ell and carries no single eigenvalue there
  if (branch) *branch = "skipped-old";
  return std::nullopt;
}

std::vector<EigenStatus> eigen_table_check(const AdmissibleConfig& cfg, const EisensteinSeries& E,
                                           long N, long ell_bound) {
  std::vector<EigenStatus> out;
  for (long ell = 2; ell <= ell_bound; ++ell) {
    if (!is_prime(ell)) continue;
    EigenStatus st;
    st.ell = ell;
    auto lam = predicted_eigenvalue(cfg, N, ell, E.ring, &st.branch);
    if (lam) {
      st.checked = true;
      st.pass = QExpansion::agree(hecke(N, ell, E.qexp), E.qexp * *lam);
    }
    out.push_back(std::move(st));
  }
  return out;
}

bool CuspidalReport::all_checks_pass() const {
  if (!error.empty()) return false;
  if (!residue_zero || !constant_two_path || !orders_match) return false;
  for (const EigenStatus& s : eigen)
    if (s.checked && !s.pass) return false;
  return true;
}

CuspidalReport run_config(long N, const AdmissibleConfig& cfg, long precision, long prime_bound) {
  auto t0 = std::chrono::steady_clock::now();
  CuspidalReport rep;
  rep.level = N;
  rep.chi_conductor = cfg.chi.conductor();
  rep.chi_index = cfg.chi_index;
  rep.chi_order = cfg.chi.order();
  rep.chi_exponents = cfg.chi.exponents();
  rep.mbar = cfg.mbar;
  rep.lbar = cfg.lbar;
  rep.series_level = cfg.series_level();
  try {
    EisensteinSeries E = build_series(cfg.chi, cfg.mbar, cfg.lbar, precision);
    if (!E.qexp.holomorphic()) throw std::logic_error("series has a non-holomorphic part");

    rep.divisor = delta_divisor(E.phi, N);
    rep.residue_zero = rep.divisor.total(E.ring).is_zero();
    // constant term at the width-one cusp over infinity must match the
    // q-expansion route
    rep.constant_two_path = false;
    for (size_t i = 0; i < rep.divisor.cusps.size(); ++i) {
      if (rep.divisor.cusps[i].d != 1) continue;
      rep.constant_two_path =
          rep.divisor.coeff[i] == E.qexp.coeff_index(0) * Rat(rep.divisor.cusps[i].width);
      break;
    }

    OrderData od = cuspidal_order(E, rep.divisor);
    rep.cusp_order = od.order;
    rep.ideal_gens = od.ideal_gens;
    rep.lattice_order = period_order(E, rep.divisor);
    rep.orders_match = rep.cusp_order == rep.lattice_order;
    for (const Int& p : prime_factors(rep.cusp_order))
      if (Int(6) * N % p != 0) rep.eisenstein_primes.push_back(p);

    rep.eigen = eigen_table_check(cfg, E, N, prime_bound);
  } catch (const std::exception& e) {
    rep.error = e.what();
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<CuspidalReport> scan(const ScanConfig& cfg) {
  if (cfg.level < 1 || cfg.level % 2 == 0)
    throw std::domain_error("scan: level must be an odd positive integer");
  if (cfg.precision < 2 * cfg.prime_bound)
    throw std::domain_error("scan: precision must be at least twice the prime bound");
  std::vector<AdmissibleConfig> configs = enumerate_admissible(cfg.level);
  if (cfg.chi_conductor) {
    std::vector<AdmissibleConfig> kept;
    for (auto& c : configs) {
      if (c.chi.conductor() != *cfg.chi_conductor) continue;
      if (cfg.chi_index && c.chi_index != *cfg.chi_index) continue;
      kept.push_back(c);
    }
    configs = std::move(kept);
  }
#ifdef _OPENMP
  if (cfg.jobs > 0) omp_set_num_threads(cfg.jobs);
#endif
  std::vector<CuspidalReport> reports(configs.size(), CuspidalReport{});
  long n = static_cast<long>(configs.size());
#ifdef _OPENMP
  #pragma omp parallel for schedule(dynamic)
#endif
  for (long i = 0; i < n; ++i)
    reports[i] = run_config(cfg.level, configs[i], cfg.precision, cfg.prime_bound);
  return reports;
}

}  // namespace eisen
