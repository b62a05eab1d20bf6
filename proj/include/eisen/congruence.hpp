#ifndef EISEN_CONGRUENCE_HPP
#define EISEN_CONGRUENCE_HPP

#include <string>
#include <vector>

#include "eisen/characters.hpp"

namespace eisen {

// Ingested Hecke eigenvalue data: one row per prime, the eigenvalue as an
// integer polynomial in a fixed algebraic generator with the given minimal
// polynomial. The library never computes these; they come from files.
struct EigenRow {
  long ell = 0;
  std::vector<Int> poly;     // a_ell = sum poly[i] * alpha^i
  std::vector<Int> minpoly;  // constant-first, must agree across rows
};

struct EigenTable {
  std::string source;
  std::vector<EigenRow> rows;
};

// CSV format: header `ell,coeff0,...,coeffK,minpoly`; the minpoly cell is
// space-separated integers, constant first (use `0 1` for rational rows).
EigenTable parse_eigen_table(const std::string& path);
EigenTable parse_eigen_table_text(const std::string& text, const std::string& label);

struct CongruenceRow {
  long ell = 0;
  bool pass = false;
  std::string branch;    // which allowed value matched
  std::string detail;    // residues involved, for diagnostics
};

struct CongruenceReport {
  long q = 0;
  long root = -1;         // chosen root of the minimal polynomial mod q
  bool vacuous = false;   // empty table
  std::vector<CongruenceRow> rows;
  bool all_pass() const;
};

// For each table row, tests the eigenvalue residue mod a degree-one prime
// above q against the values forced on the series side: chibar(l)^{-1} +
// l chibar(l) away from the level, the two-element list at primes exactly
// dividing the level, the three-element list at higher powers (collapsing
// to zero on the conductor), and chibar(q)^{-1} at q itself.
CongruenceReport congruence_check(const EigenTable& table, const DirichletCharacter& chi,
                                  long q, long N);

}  // namespace eisen

#endif
