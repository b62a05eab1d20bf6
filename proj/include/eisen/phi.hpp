#ifndef EISEN_PHI_HPP
#define EISEN_PHI_HPP

#include <utility>
#include <vector>

#include "eisen/cusps.hpp"
#include "eisen/qexp.hpp"

namespace eisen {

// One summand  coef * phi_x | [e 0; 0 1]  with x = (x1, x2) in (Q/Z)^2.
struct PhiTerm {
  Rat x1, x2;  // stored in [0, 1)
  long scale = 1;
  CycNum coef;
};

// Formal finite combination of scaled phi functions; the symbolic side of
// an Eisenstein series. Terms are kept merged and sorted so that equal
// vectors compare equal.
class PhiVector {
 public:
  explicit PhiVector(long ring, long level = 1) : ring_(ring), level_(level) {}

  long ring() const { return ring_; }
  long level() const { return level_; }
  void set_level(long level) { level_ = level; }
  const std::vector<PhiTerm>& terms() const { return terms_; }

  void add_term(const Rat& x1, const Rat& x2, long scale, const CycNum& coef);

  // expansion at the infinite cusp, coefficients of q^t for t <= prec;
  // parallel kernel with a serial reference used by tests and the benchmark
  QExpansion expand(long prec) const;
  QExpansion expand_serial(long prec) const;

  PhiVector scaled(long p, const CycNum& factor) const;  // this + factor * (this | [p 0;0 1])

 private:
  struct ExpandPlan;
  ExpandPlan make_plan(long prec) const;
  void expand_chunk(const ExpandPlan& plan, QExpansion& out, long lo, long hi) const;
  long ring_;
  long level_;
  std::vector<PhiTerm> terms_;
};

// x mod 1 componentwise
std::pair<Rat, Rat> reduce_mod1(const Rat& x1, const Rat& x2);
// right action (x1, x2) * gamma, reduced mod 1
std::pair<Rat, Rat> act_right(const std::pair<Rat, Rat>& x, const Mat2& g);

// direct expansion of a single phi_x to exponent <= prec, in powers of
// q^{1/den(x1)}; the reference path for the distribution tests
QExpansion phi_expansion(const Rat& x1, const Rat& x2, long prec, long ring);

// g | [A B; 0 D] on expansions: q^t -> (A/D) e(tB/D) q^{tA/D}
QExpansion slash_upper(const QExpansion& g, long A, long B, long D, long ring);

// verifies phi_x = sum_{y alpha = x} phi_y | alpha on expansions to prec,
// for alpha integral with positive determinant, upper-triangular or in
// SL2(Z); includes the bookkeeping of the non-holomorphic rider
bool distribution_check(const Rat& x1, const Rat& x2, const Mat2& alpha, long prec);

// E_chi as a phi combination: -(1/2 g(chi)) sum_{a,b} chi(a) chi(b)
// phi_{(a/f, b/f^2)}
PhiVector eisenstein_phi(const DirichletCharacter& chi, long ring);
// closed form of the same series: a_0 + sum sigma_chi(n) q^n with the
// non-holomorphic rider present exactly for trivial chi
QExpansion eisenstein_qexp(const DirichletCharacter& chi, long prec, long ring);

// the full series datum for a configuration (chi, mbar, lbar)
struct EisensteinSeries {
  DirichletCharacter chi;
  long mbar = 1, lbar = 1;
  long level = 1;  // conductor^2 * mbar * lbar
  long ring = 1;
  PhiVector phi;
  QExpansion qexp;
};

// applies the raising and lowering operators for the primes of mbar and
// lbar to E_chi on both representations; requires squarefree mbar, lbar
// coprime to the conductor and conductor * mbar > 1
EisensteinSeries build_series(const DirichletCharacter& chi, long mbar, long lbar, long prec);

// ring large enough for the phi-side phases and the character values
long series_ring(const DirichletCharacter& chi);

// Coefficientwise comparison, up to n_bound, of sum a_n(E) eta(n) n^{-s}
// with the Euler-factored product
//   prod_{p | lbar} (1 - chi^{-1}(p) eta(p) p^{-s})
//   prod_{p | mbar} (1 - chi(p) eta(p) p^{1-s})
//   L(chi^{-1} eta, s) L(chi eta, s - 1)
// computed as formal Dirichlet series with exact coefficients. The
// conductor of eta must be coprime to the series level.
bool dirichlet_factorization_check(const EisensteinSeries& E, const DirichletCharacter& eta,
                                   long n_bound);

}  // namespace eisen

#endif
