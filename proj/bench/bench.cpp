// Compares the parallel kernels against their serial reference
// implementations on representative workloads and verifies that the
// results are identical.

#include <chrono>
#include <iomanip>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "eisen/orders.hpp"
#include "eisen/scan.hpp"

using namespace eisen;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

void row(const std::string& name, double serial, double parallel, bool same) {
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed
            << std::setprecision(3) << std::setw(9) << serial << "s" << std::setw(9) << parallel
            << "s   x" << std::setprecision(2) << (parallel > 0 ? serial / parallel : 0.0)
            << (same ? "" : "   RESULTS DIFFER") << "\n";
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (built without OpenMP)\n";
#endif
  std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(10) << "serial"
            << std::setw(10) << "parallel" << "   speedup\n";

  {
    DirichletCharacter chi = primitive_characters(9)[0];
    PhiVector phi = eisenstein_phi(chi, series_ring(chi));
    auto t0 = std::chrono::steady_clock::now();
    QExpansion a = phi.expand_serial(2000);
    auto t1 = std::chrono::steady_clock::now();
    QExpansion b = phi.expand(2000);
    auto t2 = std::chrono::steady_clock::now();
    row("phi expansion, conductor 9", seconds(t0, t1), seconds(t1, t2), QExpansion::agree(a, b));
  }

  {
    DirichletCharacter quad3 = DirichletCharacter::legendre(3);
    EisensteinSeries E = build_series(quad3, 5, 7, 16);
    auto t0 = std::chrono::steady_clock::now();
    CuspDivisor a = delta_divisor_serial(E.phi, 315);
    auto t1 = std::chrono::steady_clock::now();
    CuspDivisor b = delta_divisor(E.phi, 315);
    auto t2 = std::chrono::steady_clock::now();
    bool same = a.coeff.size() == b.coeff.size();
    for (size_t i = 0; same && i < a.coeff.size(); ++i) same = a.coeff[i] == b.coeff[i];
    row("cusp divisor, level 315", seconds(t0, t1), seconds(t1, t2), same);
  }

  {
    ScanConfig cfg;
    cfg.level = 99;
    cfg.precision = 1200;
    cfg.prime_bound = 50;
    cfg.jobs = 1;
    auto t0 = std::chrono::steady_clock::now();
    auto a = scan(cfg);
    auto t1 = std::chrono::steady_clock::now();
    cfg.jobs = 0;
#ifdef _OPENMP
    cfg.jobs = omp_get_num_procs();
#endif
    auto b = scan(cfg);
    auto t2 = std::chrono::steady_clock::now();
    bool same = a.size() == b.size();
    for (size_t i = 0; same && i < a.size(); ++i)
      same = a[i].cusp_order == b[i].cusp_order && a[i].lattice_order == b[i].lattice_order;
    row("level-99 scan", seconds(t0, t1), seconds(t1, t2), same);
  }

  return 0;
}
