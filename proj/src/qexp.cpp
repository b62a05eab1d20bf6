#include "eisen/qexp.hpp"

#include <algorithm>
#include <stdexcept>

namespace eisen {

CycNum QExpansion::coeff(const Rat& t) const {
  if (t > prec()) throw PrecisionError("coefficient beyond stored precision");
  Rat idx = t * den_;
  if (denominator(idx) != 1) return CycNum::zero(ring_);
  long i = static_cast<long>(numerator(idx));
  if (i < 0) throw std::domain_error("coeff: negative exponent");
  return c_[i];
}

bool QExpansion::agree(const QExpansion& a, const QExpansion& b) {
  if (a.ring_ != b.ring_) throw std::logic_error("agree: expansions in different rings");
  if (!(a.rider_ == b.rider_)) return false;
  long den = llcm(a.den_, b.den_);
  Rat bound = std::min(a.prec(), b.prec());
  for (long i = 0; Rat(i, den) <= bound; ++i) {
    Rat t(i, den);
    if (!(a.coeff(t) == b.coeff(t))) return false;
  }
  return true;
}

std::optional<QExpansion> QExpansion::with_den(long new_den) const {
  if (den_ % new_den != 0) return std::nullopt;
  long step = den_ / new_den;
  QExpansion out(level_, new_den, nmax_internal() / step, ring_);
  out.rider_ = rider_;
  for (long i = 0; i <= nmax_internal(); ++i) {
    if (c_[i].is_zero()) continue;
    if (i % step != 0) return std::nullopt;
    if (i / step <= out.nmax_internal()) out.c_[i / step] = c_[i];
  }
  return out;
}

QExpansion QExpansion::embed(long ring) const {
  if (ring == ring_) return *this;
  QExpansion out(level_, den_, nmax_internal(), ring);
  out.rider_ = rider_.embed(ring);
  for (long i = 0; i <= nmax_internal(); ++i)
    if (!c_[i].is_zero()) out.c_[i] = c_[i].embed(ring);
  return out;
}

QExpansion QExpansion::operator+(const QExpansion& o) const {
  if (ring_ != o.ring_) throw std::logic_error("QExpansion: mixed rings");
  long den = llcm(den_, o.den_);
  Rat bound = std::min(prec(), o.prec());
  long nmax = static_cast<long>(numerator(bound * den) / denominator(bound * den));
  QExpansion out(llcm(level_, o.level_), den, nmax, ring_);
  out.rider_ = rider_ + o.rider_;
  for (long i = 0; i <= nmax; ++i) out.c_[i] = coeff(Rat(i, den)) + o.coeff(Rat(i, den));
  return out;
}

QExpansion QExpansion::operator-(const QExpansion& o) const {
  return *this + (o * Rat(-1));
}

QExpansion QExpansion::operator*(const CycNum& s) const {
  QExpansion out = *this;
  out.rider_ = out.rider_ * s;
  for (auto& ci : out.c_) ci = ci * s;
  return out;
}

QExpansion QExpansion::operator*(const Rat& s) const {
  QExpansion out = *this;
  out.rider_ *= s;
  for (auto& ci : out.c_) ci *= s;
  return out;
}

QExpansion gamma_scale(const QExpansion& g, long p) {
  if (p < 1) throw std::domain_error("gamma_scale: scale must be positive");
  QExpansion out(g.level() * p, g.den(), g.nmax() * p, g.ring());
  out.rider() = g.rider();
  for (long i = 0; i <= g.nmax(); ++i)
    if (!g.coeff_index(i).is_zero()) out.coeff_index(i * p) = g.coeff_index(i) * Rat(p);
  return out;
}

QExpansion degeneracy(long d, const QExpansion& g) {
  QExpansion out = gamma_scale(g, d);
  return out * Rat(1, d);
}

QExpansion op_plus(const DirichletCharacter& chi, long p, const QExpansion& g) {
  if (chi.conductor() % p == 0 || lgcd(p, chi.conductor()) != 1)
    throw std::domain_error("op_plus: prime divides the conductor");
  return g - gamma_scale(g, p) * chi.value(Int(p), g.ring());
}

QExpansion op_minus(const DirichletCharacter& chi, long p, const QExpansion& g) {
  if (lgcd(p, chi.conductor()) != 1)
    throw std::domain_error("op_minus: prime divides the conductor");
  return g - gamma_scale(g, p) * (chi.value_inv(Int(p), g.ring()) * Rat(1, p));
}

QExpansion hecke(long N, long ell, const QExpansion& g, long floor) {
  if (g.den() != 1) throw std::domain_error("hecke: integral exponents required");
  if (g.level() == 0 || N % g.level() != 0)
    throw std::domain_error("hecke: expansion level must divide the operator level");
  long nmax = g.nmax() / ell;
  if (nmax < floor)
    throw PrecisionError("hecke: output precision " + std::to_string(nmax) +
                         " below floor " + std::to_string(floor));
  bool coprime = (N % ell != 0);
  QExpansion out(N, 1, nmax, g.ring());
  for (long n = 0; n <= nmax; ++n) {
    CycNum v = g.coeff_index(n * ell);
    if (coprime && n % ell == 0) v += g.coeff_index(n / ell) * Rat(ell);
    out.coeff_index(n) = v;
  }
  out.rider() = g.rider() * Rat(coprime ? ell + 1 : ell);
  return out;
}

bool oldform_quadratic_check(const QExpansion& g, long p, long prec) {
  long base = g.level();
  if (base % p == 0) throw std::domain_error("oldform_quadratic_check: p must not divide the base level");
  long N = base * p;
  if (g.nmax() < prec * p * p)
    throw PrecisionError("oldform_quadratic_check: input precision too small");
  for (int which = 0; which < 2; ++which) {
    QExpansion h = (which == 0) ? g : degeneracy(p, g);
    h.set_level(N);
    QExpansion u2 = hecke(N, p, hecke(N, p, h));
    QExpansion th = h;
    th.set_level(base);
    th = hecke(base, p, th);
    th.set_level(N);
    QExpansion uth = hecke(N, p, th);
    QExpansion total = u2 - uth + h * Rat(p);
    for (long i = 0; i <= std::min(total.nmax(), prec); ++i)
      if (!total.coeff_index(i).is_zero()) return false;
  }
  return true;
}

CycNum sigma_chi(const DirichletCharacter& chi, long n, long ring) {
  if (n < 1) throw std::domain_error("sigma_chi: positive index required");
  CycNum s = CycNum::zero(ring);
  for (long d : divisors(n)) {
    auto kd = chi.value_index(Int(d));
    auto kq = chi.value_index(Int(n / d));
    if (!kd || !kq) continue;
    long k = ((*kd - *kq) % chi.order() + chi.order()) % chi.order();
    s.addmul(Rat(d), CycNum::unit_phase(ring, k, chi.order()));
  }
  return s;
}

}  // namespace eisen
