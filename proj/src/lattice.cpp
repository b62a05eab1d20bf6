#include "eisen/lattice.hpp"

#include <algorithm>

namespace eisen {

std::vector<Int> smith_divisors(std::vector<std::vector<Int>> a) {
  long rows = static_cast<long>(a.size());
  long cols = rows ? static_cast<long>(a[0].size()) : 0;
  std::vector<Int> divisors;
  long t = 0;  // working corner
  while (t < rows && t < cols) {
    // locate smallest nonzero entry in the remaining block
    long pi = -1, pj = -1;
    for (long i = t; i < rows; ++i)
      for (long j = t; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        if (pi < 0 || abs(a[i][j]) < abs(a[pi][pj])) { pi = i; pj = j; }
      }
    if (pi < 0) break;
    std::swap(a[t], a[pi]);
    for (long i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);
    // clear row and column by euclidean steps
    bool clean = false;
    while (!clean) {
      clean = true;
      for (long i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Int q = floor_div(a[i][t], a[t][t]);
        for (long j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (long j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Int q = floor_div(a[t][j], a[t][t]);
        for (long i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (long i = 0; i < rows; ++i) std::swap(a[i][t], a[i][j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility condition: a[t][t] must divide the rest of the block
      for (long i = t + 1; i < rows && clean; ++i)
        for (long j = t + 1; j < cols && clean; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (long jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
            clean = false;
          }
    }
    divisors.push_back(abs(a[t][t]));
    ++t;
  }
  return divisors;
}

Rat fractional_index(const std::vector<std::vector<Rat>>& generators, long rank) {
  if (rank == 0) return Rat(1);
  if (generators.empty()) throw InfiniteIndexError();
  Int den(1);
  for (const auto& g : generators) {
    if (static_cast<long>(g.size()) != rank)
      throw std::domain_error("fractional_index: generator has wrong length");
    for (const Rat& x : g) den = ilcm(den, denominator(x));
  }
  std::vector<std::vector<Int>> mat;
  mat.reserve(generators.size());
  for (const auto& g : generators) {
    std::vector<Int> row(rank);
    for (long j = 0; j < rank; ++j)
      row[j] = numerator(g[j]) * (den / denominator(g[j]));
    mat.push_back(std::move(row));
  }
  std::vector<Int> d = smith_divisors(std::move(mat));
  long nonzero = 0;
  Rat idx(1);
  for (const Int& e : d)
    if (e != 0) {
      ++nonzero;
      idx *= Rat(e);
    }
  if (nonzero < rank) throw InfiniteIndexError();
  Rat scale(Int(1));
  for (long i = 0; i < rank; ++i) scale *= Rat(den);
  return idx / scale;
}

Int lattice_index(const Lattice& sub) {
  Rat idx = fractional_index(sub.generators, sub.rank);
  Rat stripped = strip_primes(idx, sub.inverted_primes);
  if (denominator(stripped) != 1)
    throw std::domain_error("lattice_index: not a sublattice away from the inverted primes");
  return numerator(stripped);
}

}  // namespace eisen
