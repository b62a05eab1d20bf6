#include "eisen/constant_term.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eisen {

HermiteFactor hermite_left(const Mat2& m) {
  Int det = mat2_det(m);
  if (det <= 0) throw std::domain_error("hermite_left: determinant must be positive");
  // clear the bottom-left entry with a unimodular row operation:
  // find (s t) with s m00 + t m10 = 0 and (u v) completing to SL2
  Int a = m[0][0], c = m[1][0];
  if (a == 0 && c == 0) throw std::domain_error("hermite_left: zero first column");
  Int u, v, gg;
  if (c == 0) {
    u = a < 0 ? -1 : 1;
    v = 0;
    gg = a * u;
  } else {
    // extended gcd: u a + v c = gg > 0
    Int u0 = 0, u1 = 1, r0 = c, r1 = a;
    while (r0 != 0) {
      Int q = r1 / r0;
      Int tmp = u1 - q * u0; u1 = u0; u0 = tmp;
      tmp = r1 - q * r0; r1 = r0; r0 = tmp;
    }
    Int sign = r1 < 0 ? -1 : 1;
    u = u1 * sign;
    gg = r1 * sign;
    v = (gg - u * a) / c;
  }
  // U = [u v; -c/g a/g] is unimodular and U m has zero bottom-left
  Mat2 U = {{{u, v}, {-c / gg, a / gg}}};
  if (mat2_det(U) != 1) throw std::logic_error("hermite_left: completion not unimodular");
  Mat2 H = mat2_mul(U, m);
  // gamma = U^{-1}
  Mat2 gamma = {{{U[1][1], -U[0][1]}, {-U[1][0], U[0][0]}}};
  if (H[1][1] < 0) {
    // flip both signs of the triangular factor; -1 is unimodular
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) { H[i][j] = -H[i][j]; gamma[i][j] = -gamma[i][j]; }
  }
  // reduce B modulo D: H -> T^{-k} H, gamma -> gamma T^{k}
  Int D = H[1][1], B = H[0][1];
  Int k = floor_div(B, D);
  B -= k * D;
  Mat2 Tk = {{{Int(1), k}, {Int(0), Int(1)}}};
  gamma = mat2_mul(gamma, Tk);
  HermiteFactor out{gamma, H[0][0], B, D};
  if (out.A * out.D != det || out.D <= 0 || out.B < 0 || out.B >= out.D)
    throw std::logic_error("hermite_left: factor not canonical");
  Mat2 Hc = {{{out.A, out.B}, {Int(0), out.D}}};
  Mat2 back = mat2_mul(out.gamma, Hc);
  if (!(back == m)) throw std::logic_error("hermite_left: factorization does not reproduce input");
  return out;
}

CycNum constant_term(const PhiVector& E, const Cusp& c) {
  if (c.level % E.level() != 0)
    throw std::domain_error("constant_term: series level must divide the cusp level");
  long ring = E.ring();
  CycNum acc = CycNum::zero(ring);
  CycNum rider = CycNum::zero(ring);
  for (const PhiTerm& t : E.terms()) {
    Mat2 scaled = {{{Int(t.scale) * c.sigma[0][0], Int(t.scale) * c.sigma[0][1]},
                    {c.sigma[1][0], c.sigma[1][1]}}};
    HermiteFactor h = hermite_left(scaled);
    auto w = act_right({t.x1, t.x2}, h.gamma);
    acc.addmul(Rat(h.A, h.D) * bernoulli2(w.first) / 2, t.coef);
    if (w.first == 0 && w.second == 0) rider -= t.coef;
  }
  if (!rider.is_zero())
    throw std::domain_error("constant_term: non-holomorphic part does not cancel at the cusp");
  return acc;
}

CuspDivisor delta_divisor_serial(const PhiVector& E, long N) {
  CuspDivisor div;
  div.level = N;
  div.cusps = enumerate_cusps(N);
  div.coeff.assign(div.cusps.size(), CycNum::zero(E.ring()));
  for (size_t i = 0; i < div.cusps.size(); ++i)
    div.coeff[i] = constant_term(E, div.cusps[i]) * Rat(div.cusps[i].width);
  return div;
}

CuspDivisor delta_divisor(const PhiVector& E, long N) {
  CuspDivisor div;
  div.level = N;
  div.cusps = enumerate_cusps(N);
  div.coeff.assign(div.cusps.size(), CycNum::zero(E.ring()));
  long n = static_cast<long>(div.cusps.size());
  // exceptions must not escape the parallel region; carry the first one out
  std::exception_ptr err;
#ifdef _OPENMP
  #pragma omp parallel for schedule(dynamic)
#endif
  for (long i = 0; i < n; ++i) {
    try {
      div.coeff[i] = constant_term(E, div.cusps[i]) * Rat(div.cusps[i].width);
    } catch (...) {
#ifdef _OPENMP
      #pragma omp critical
#endif
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return div;
}

CycNum CuspDivisor::total(long ring) const {
  CycNum s = CycNum::zero(ring);
  for (const CycNum& c : coeff) s += c;
  return s;
}

}  // namespace eisen
