#ifndef EISEN_QEXP_HPP
#define EISEN_QEXP_HPP

#include <optional>
#include <vector>

#include "eisen/characters.hpp"
#include "eisen/cyclotomic.hpp"

namespace eisen {

// Truncated Fourier expansion with exact cyclotomic coefficients. The slot
// with index i holds the coefficient of q^{i/den}; all coefficients up to
// exponent prec() are valid. A holomorphic series has rider() == 0; the
// rider tracks the coefficient of the weight-two non-holomorphic term
// 1/(4 pi Im z), which is inert under upper-triangular slash actions.
class QExpansion {
 public:
  QExpansion(long level, long den, long nmax, long ring)
      : level_(level), den_(den), ring_(ring), c_(nmax + 1, CycNum::zero(ring)), rider_(CycNum::zero(ring)) {}

  long level() const { return level_; }
  long den() const { return den_; }
  long nmax() const { return nmax_internal(); }
  long ring() const { return ring_; }
  Rat prec() const { return Rat(nmax_internal(), den_); }

  const CycNum& coeff_index(long i) const { return c_[i]; }
  CycNum& coeff_index(long i) { return c_[i]; }
  // coefficient of q^t for rational t; zero off the stored grid, throws
  // beyond the precision bound
  CycNum coeff(const Rat& t) const;

  const CycNum& rider() const { return rider_; }
  CycNum& rider() { return rider_; }
  bool holomorphic() const { return rider_.is_zero(); }

  void set_level(long level) { level_ = level; }

  // exact equality on the common valid range (and equal riders); expansions
  // must share ring and exponent grid granularity after alignment
  static bool agree(const QExpansion& a, const QExpansion& b);

  // rewrite on a coarser exponent denominator; fails if a coefficient
  // living off the coarse grid is nonzero
  std::optional<QExpansion> with_den(long new_den) const;

  QExpansion embed(long ring) const;

  QExpansion operator+(const QExpansion& o) const;
  QExpansion operator-(const QExpansion& o) const;
  QExpansion operator*(const CycNum& s) const;
  QExpansion operator*(const Rat& s) const;

 private:
  long nmax_internal() const { return static_cast<long>(c_.size()) - 1; }
  long level_, den_, ring_;
  std::vector<CycNum> c_;
  CycNum rider_;
};

// g | [p 0; 0 1]: a_n -> p a_{n/p}, level multiplied by p, rider inert
QExpansion gamma_scale(const QExpansion& g, long p);

// g(z) -> g(d z): a_n -> a_{n/d}; level multiplied by d
QExpansion degeneracy(long d, const QExpansion& g);

// (1 - chi(p) gamma_p) g: coefficients a_n - chi(p) p a_{n/p}
QExpansion op_plus(const DirichletCharacter& chi, long p, const QExpansion& g);
// (1 - gamma_p / (p chi(p))) g: coefficients a_n - chi(p)^{-1} a_{n/p}
QExpansion op_minus(const DirichletCharacter& chi, long p, const QExpansion& g);

// Hecke operator at level N: a_n -> a_{ln} + l a_{n/l} for l coprime to N,
// a_n -> a_{ln} otherwise. Output precision shrinks by the factor l; an
// output precision below `floor` is an error.
QExpansion hecke(long N, long ell, const QExpansion& g, long floor = 1);

// sigma_chi(n) = sum_{d | n} d chi(d) chi^{-1}(n/d)
CycNum sigma_chi(const DirichletCharacter& chi, long n, long ring);

// For p exactly dividing N and g any expansion of level N/p, the operator
// U_p^2 - U_p T_p^{(N/p)} + p annihilates both g(z) and g(pz). On genuine
// old forms the two factors in the middle term commute; on raw truncated
// sequences only this order is the identity, so this is the one checked.
bool oldform_quadratic_check(const QExpansion& g, long p, long prec);

struct PrecisionError : std::runtime_error {
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace eisen

#endif
