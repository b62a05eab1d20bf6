#ifndef EISEN_CHARACTERS_HPP
#define EISEN_CHARACTERS_HPP

#include <map>
#include <optional>
#include <vector>

#include "eisen/cyclotomic.hpp"

namespace eisen {

// Cyclic decomposition of (Z/f)^x with a discrete-log table. Cached per
// modulus; the generator list is fixed so that exponent vectors are a
// canonical encoding of characters.
struct UnitGroup {
  long modulus = 1;
  std::vector<long> gens;
  std::vector<long> orders;            // same length as gens, product = phi(f)
  std::map<long, std::vector<long>> dlog;  // unit residue -> exponent vector

  static const UnitGroup& get(long f);
  long order() const;
  bool is_unit(long r) const { return lgcd(r % modulus, modulus) == 1 || modulus == 1; }
};

class DirichletCharacter {
 public:
  // character mod f with chi(gens[i]) = zeta_{orders[i]}^{exps[i]}
  DirichletCharacter(long modulus, std::vector<long> exps);

  static DirichletCharacter trivial(long f = 1) {
    return DirichletCharacter(f, std::vector<long>(UnitGroup::get(f).gens.size(), 0));
  }
  // the quadratic residue character mod an odd prime p
  static DirichletCharacter legendre(long p);

  long modulus() const { return modulus_; }
  long order() const { return order_; }
  long conductor() const { return conductor_; }
  const std::vector<long>& exponents() const { return exps_; }
  bool is_trivial() const { return order_ == 1; }

  // chi(n) = zeta_order^{k}; nullopt when gcd(n, f) > 1
  std::optional<long> value_index(const Int& n) const;
  // chi(n) as an element of Q(zeta_ring), zero on non-units; ring must be a
  // multiple of the order
  CycNum value(const Int& n, long ring) const;
  CycNum value_inv(const Int& n, long ring) const;
  // chi(-1)
  int parity() const;

  DirichletCharacter inverse() const;
  DirichletCharacter primitive_part() const;
  // induce this character to a larger modulus (conductor must divide it)
  DirichletCharacter induce(long modulus) const;

  bool operator==(const DirichletCharacter& o) const {
    return modulus_ == o.modulus_ && exps_ == o.exps_;
  }

 private:
  long modulus_;
  std::vector<long> exps_;
  long order_;
  long conductor_;
};

// chi * psi for characters with coprime moduli, as a character mod f1*f2
DirichletCharacter multiply_coprime(const DirichletCharacter& a, const DirichletCharacter& b);

// all characters mod f in canonical (mixed-radix exponent) order
std::vector<DirichletCharacter> all_characters(long f);
// the primitive ones among them, same order
std::vector<DirichletCharacter> primitive_characters(long f);

// Lift of a mod-q character to characteristic zero: the input character of
// (Z/f)^x into F_q^x is given by exponents of a fixed generator of F_q^x,
// i.e. chibar(gens[i]) = w^{exps_q[i]} with w of order q-1. The lift has the
// same kernel, order and conductor, with values in mu_{q-1}.
DirichletCharacter teichmuller_lift(long f, const std::vector<long>& exps_q, long q);

// Auxiliary character family: all non-quadratic characters whose conductor
// is a prime p <= bound with p = -1 (mod 4N), each tagged with its
// quadratic twist.
struct EtaCharacter {
  DirichletCharacter eta;
  DirichletCharacter legendre_twist;  // eta * (quadratic character mod p)
};
std::vector<EtaCharacter> enumerate_eta(long N, long bound);

}  // namespace eisen

#endif
