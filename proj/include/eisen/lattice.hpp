#ifndef EISEN_LATTICE_HPP
#define EISEN_LATTICE_HPP

#include <stdexcept>
#include <vector>

#include "eisen/arith.hpp"

namespace eisen {

struct InfiniteIndexError : std::runtime_error {
  InfiniteIndexError() : std::runtime_error("lattice does not span full rank") {}
};

// A sublattice of Q^r given by (possibly redundant) generators, together
// with a set of primes that are treated as invertible when an index is
// reported.
struct Lattice {
  long rank = 0;
  std::vector<std::vector<Rat>> generators;  // each of length rank
  std::vector<Int> inverted_primes;
};

// Smith normal form of an integer matrix; returns the elementary divisors
// d_1 | d_2 | ... (nonzero ones only).
std::vector<Int> smith_divisors(std::vector<std::vector<Int>> mat);

// |det| of a basis of the rational lattice spanned by the generators,
// relative to the standard lattice Z^r: the product of the Smith divisors
// of the cleared-denominator matrix divided by D^r. Throws
// InfiniteIndexError if the span has rank < r.
Rat fractional_index(const std::vector<std::vector<Rat>>& generators, long rank);

// Index of the sublattice in Z^r with every factor of the inverted primes
// removed. Throws InfiniteIndexError on rank deficiency and domain_error
// if the result is not integral away from the inverted primes.
Int lattice_index(const Lattice& sub);

}  // namespace eisen

#endif
