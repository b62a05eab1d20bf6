#include "eisen/phi.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "eisen/charsums.hpp"

namespace eisen {

std::pair<Rat, Rat> reduce_mod1(const Rat& x1, const Rat& x2) {
  return {frac_part(x1), frac_part(x2)};
}

std::pair<Rat, Rat> act_right(const std::pair<Rat, Rat>& x, const Mat2& g) {
  Rat y1 = x.first * Rat(g[0][0]) + x.second * Rat(g[1][0]);
  Rat y2 = x.first * Rat(g[0][1]) + x.second * Rat(g[1][1]);
  return reduce_mod1(y1, y2);
}

void PhiVector::add_term(const Rat& x1, const Rat& x2, long scale, const CycNum& coef) {
  if (coef.ring() != ring_) throw std::logic_error("PhiVector: coefficient ring mismatch");
  auto [u1, u2] = reduce_mod1(x1, x2);
  auto key_less = [](const PhiTerm& t, const std::tuple<const Rat&, const Rat&, long>& k) {
    return std::tie(t.x1, t.x2, t.scale) < k;
  };
  auto key = std::tie(u1, u2, scale);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key, key_less);
  if (it != terms_.end() && std::tie(it->x1, it->x2, it->scale) == key) {
    it->coef += coef;
    if (it->coef.is_zero()) terms_.erase(it);
    return;
  }
  terms_.insert(it, PhiTerm{u1, u2, scale, coef});
}

PhiVector PhiVector::scaled(long p, const CycNum& factor) const {
  PhiVector out(ring_, level_ * p);
  for (const PhiTerm& t : terms_) {
    out.add_term(t.x1, t.x2, t.scale, t.coef);
    out.add_term(t.x1, t.x2, t.scale * p, t.coef * factor);
  }
  return out;
}

// A slot-generating group: all contributions with the same congruence
// class x1 and scale e share the k-loop; phases folded per m mod den2.
// The plan is built once per expansion and shared by every chunk.
struct PhiVector::ExpandPlan {
  struct Group {
    long a = 0, f = 1;  // x1 = a/f in lowest terms
    long e = 1;
    long den2 = 1;
    std::vector<CycNum> phases;  // index m mod den2
  };
  long D = 1;
  std::vector<Group> groups;
  CycNum constant, rider;
};

PhiVector::ExpandPlan PhiVector::make_plan(long /*prec*/) const {
  ExpandPlan plan;
  plan.constant = CycNum::zero(ring_);
  plan.rider = CycNum::zero(ring_);
  for (const PhiTerm& t : terms_) {
    plan.D = llcm(plan.D, static_cast<long>(denominator(t.x1)));
    plan.constant.addmul(Rat(t.scale) * bernoulli2(t.x1) / 2, t.coef);
    if (t.x1 == 0 && t.x2 == 0) plan.rider -= t.coef;
  }

  // phases are accumulated in raw exponent space and reduced modulo the
  // cyclotomic polynomial once per group entry
  long ring = ring_;
  long phi = CycRing::get(ring).degree();
  std::map<std::tuple<Rat, long>, size_t> index;
  std::vector<std::vector<std::vector<Rat>>> raw;  // group -> m -> exponent
  auto feed = [&](const Rat& x1, const Rat& x2, long e, const CycNum& coef) {
    auto key = std::make_tuple(x1, e);
    auto it = index.find(key);
    if (it == index.end()) {
      ExpandPlan::Group g;
      g.a = static_cast<long>(numerator(x1));
      g.f = static_cast<long>(denominator(x1));
      g.e = e;
      g.den2 = 1;
      it = index.emplace(key, plan.groups.size()).first;
      plan.groups.push_back(std::move(g));
      raw.emplace_back();
    }
    ExpandPlan::Group& g = plan.groups[it->second];
    auto& rg = raw[it->second];
    long d2 = static_cast<long>(denominator(x2));
    if (g.den2 % d2 != 0) {
      long nd = llcm(g.den2, d2);
      std::vector<std::vector<Rat>> nr(nd, std::vector<Rat>(ring, Rat(0)));
      for (long m = 0; m < nd && !rg.empty(); ++m) nr[m] = rg[m % g.den2];
      g.den2 = nd;
      rg = std::move(nr);
    }
    if (rg.empty()) rg.assign(g.den2, std::vector<Rat>(ring, Rat(0)));
    long a2 = static_cast<long>(numerator(x2));
    long step = ring / d2;
    for (long m = 0; m < g.den2; ++m) {
      long e2 = (((m * a2) % d2 + d2) % d2) * step;
      for (long i = 0; i < phi; ++i)
        if (coef.coeffs()[i] != 0) rg[m][(i + e2) % ring] += coef.coeffs()[i];
    }
  };
  for (const PhiTerm& t : terms_) {
    feed(t.x1, t.x2, t.scale, t.coef);
    auto [n1, n2] = reduce_mod1(-t.x1, -t.x2);
    feed(n1, n2, t.scale, t.coef);
  }
  for (size_t gi = 0; gi < plan.groups.size(); ++gi) {
    ExpandPlan::Group& g = plan.groups[gi];
    g.phases.assign(g.den2, CycNum::zero(ring));
    for (long m = 0; m < g.den2; ++m)
      for (long k = 0; k < ring; ++k)
        if (raw[gi][m][k] != 0) g.phases[m].add_monomial(raw[gi][m][k], k);
  }
  return plan;
}

void PhiVector::expand_chunk(const ExpandPlan& plan, QExpansion& out, long lo, long hi) const {
  long D = out.den();
  if (lo == 0) {
    out.coeff_index(0) += plan.constant;
    out.rider() += plan.rider;
  }
  for (const auto& g : plan.groups) {
    // k runs over positives congruent to a/f mod 1; slot = k m e D
    for (long j = (g.a == 0 ? 1 : 0);; ++j) {
      // k = (a + j f)/f, w = slot step per m
      long numk = g.a + j * g.f;
      long w = numk * g.e * (D / g.f);
      if (w > hi) break;
      long m0 = std::max<long>(1, (lo + w - 1) / w);
      for (long m = m0; m * w <= hi; ++m) {
        // contribution -e k * phase(m) at slot k m e D
        out.coeff_index(m * w).addmul(Rat(-g.e * numk, g.f), g.phases[m % g.den2]);
      }
    }
  }
}

QExpansion PhiVector::expand_serial(long prec) const {
  ExpandPlan plan = make_plan(prec);
  QExpansion out(level_, plan.D, prec * plan.D, ring_);
  expand_chunk(plan, out, 0, prec * plan.D);
  return out;
}

QExpansion PhiVector::expand(long prec) const {
  ExpandPlan plan = make_plan(prec);
  QExpansion out(level_, plan.D, prec * plan.D, ring_);
  long nmax = prec * plan.D;
#ifdef _OPENMP
  #pragma omp parallel
  {
    int nt = omp_get_num_threads();
    int id = omp_get_thread_num();
    long chunk = (nmax + nt) / nt;
    long lo = id * chunk;
    long hi = std::min(nmax, lo + chunk - 1);
    if (lo <= hi) expand_chunk(plan, out, lo, hi);
  }
#else
  expand_chunk(plan, out, 0, nmax);
#endif
  return out;
}

QExpansion phi_expansion(const Rat& x1in, const Rat& x2in, long prec, long ring) {
  auto [x1, x2] = reduce_mod1(x1in, x2in);
  long f = static_cast<long>(denominator(x1));
  long a = static_cast<long>(numerator(x1));
  long d2 = static_cast<long>(denominator(x2));
  long a2 = static_cast<long>(numerator(x2));
  if (ring % d2 != 0) throw std::domain_error("phi_expansion: ring misses the phase roots");
  QExpansion out(1, f, prec * f, ring);
  out.coeff_index(0) = CycNum::from_rat(ring, bernoulli2(x1) / 2);
  if (x1 == 0 && x2 == 0) out.rider() = CycNum::from_rat(ring, Rat(-1));
  long nmax = prec * f;
  // P_x: k = x1 mod 1, phases e(m x2); P_{-x}: k = -x1 mod 1, phases e(-m x2)
  for (int side = 0; side < 2; ++side) {
    long anum = side == 0 ? a : (f - a) % f;
    long asgn = side == 0 ? 1 : -1;
    for (long j = (anum == 0 ? 1 : 0);; ++j) {
      long numk = anum + j * f;
      if (numk > nmax) break;
      for (long m = 1; m * numk <= nmax; ++m)
        out.coeff_index(m * numk).addmul(Rat(-numk, f), CycNum::unit_phase(ring, asgn * m * a2, d2));
    }
  }
  return out;
}

QExpansion slash_upper(const QExpansion& g, long A, long B, long D, long ring) {
  if (A <= 0 || D <= 0) throw std::domain_error("slash_upper: positive diagonal required");
  long den = g.den() * D;
  if (ring % den != 0 || ring % g.ring() != 0)
    throw std::domain_error("slash_upper: ring misses the phase roots");
  // exponent i/den_g -> i A / (den_g D); valid up to prec * A / D
  QExpansion out(g.level(), den, g.nmax() * A, ring);
  out.rider() = g.rider().embed(ring);
  Rat scale(A, D);
  for (long i = 0; i <= g.nmax(); ++i) {
    if (g.coeff_index(i).is_zero()) continue;
    CycNum phase = CycNum::unit_phase(ring, i * B, den);
    out.coeff_index(i * A) = g.coeff_index(i).embed(ring) * phase * scale;
  }
  return out;
}

bool distribution_check(const Rat& x1in, const Rat& x2in, const Mat2& alpha, long prec) {
  Int det = mat2_det(alpha);
  if (det <= 0) throw std::domain_error("distribution_check: determinant must be positive");
  auto [x1, x2] = reduce_mod1(x1in, x2in);

  if (alpha[1][0] == 0) {
    long A = static_cast<long>(alpha[0][0]);
    long B = static_cast<long>(alpha[0][1]);
    long D = static_cast<long>(alpha[1][1]);
    if (A < 0) { A = -A; B = -B; D = -D; }  // -alpha acts identically in weight two
    if (D < 0) throw std::domain_error("distribution_check: diagonal signs mixed");
    // collect the det-many preimages y of x under right multiplication
    std::vector<std::pair<Rat, Rat>> ys;
    for (long i = 0; i < A; ++i) {
      Rat y1 = (x1 + i) / A;
      for (long j = 0; j < D; ++j) {
        Rat y2 = (x2 - y1 * B + j) / D;
        ys.push_back(reduce_mod1(y1, y2));
      }
    }
    long ring = llcm(1, static_cast<long>(denominator(x2)));
    for (auto& y : ys) {
      ring = llcm(ring, static_cast<long>(denominator(y.second)));
      ring = llcm(ring, static_cast<long>(denominator(y.first)) * D);
    }
    long yprec = prec * D / A + 1;
    QExpansion lhs = phi_expansion(x1, x2, prec, ring);
    QExpansion rhs(1, 1, 0, ring);
    bool first = true;
    for (auto& y : ys) {
      QExpansion part = slash_upper(phi_expansion(y.first, y.second, yprec, ring), A, B, D, ring);
      rhs = first ? part : rhs + part;
      first = false;
    }
    return QExpansion::agree(lhs, rhs);
  }

  if (det == 1) {
    // unimodular case: the law collapses to the relabeling rule
    Mat2 inv = {{{alpha[1][1], -alpha[0][1]}, {-alpha[1][0], alpha[0][0]}}};
    auto y = act_right({x1, x2}, inv);
    auto back = act_right(y, alpha);
    long ring = llcm(static_cast<long>(denominator(x2)), static_cast<long>(denominator(back.second)));
    QExpansion lhs = phi_expansion(x1, x2, prec, ring);
    QExpansion rhs = phi_expansion(back.first, back.second, prec, ring);
    return QExpansion::agree(lhs, rhs);
  }
  throw std::domain_error("distribution_check: matrix must be upper-triangular or unimodular");
}

long series_ring(const DirichletCharacter& chi) {
  long f = chi.conductor();
  return llcm(f * f, chi.order());
}

PhiVector eisenstein_phi(const DirichletCharacter& chi, long ring) {
  if (chi.conductor() != chi.modulus())
    throw std::domain_error("eisenstein_phi: character must be primitive");
  long f = chi.conductor();
  if (ring % series_ring(chi) != 0) throw std::domain_error("eisenstein_phi: ring too small");
  CycNum norm = gauss_sum(chi, ring).inverse() * Rat(-1, 2);
  PhiVector out(ring, f * f);
  long f2 = f * f;
  for (long a = 0; a < f; ++a) {
    auto ka = chi.value_index(Int(a));
    if (!ka) continue;
    for (long b = 0; b < f2; ++b) {
      auto kb = chi.value_index(Int(b));
      if (!kb) continue;
      CycNum coef = CycNum::unit_phase(ring, *ka + *kb, chi.order()) * norm;
      out.add_term(Rat(a, f), Rat(b, f2), 1, coef);
    }
  }
  return out;
}

QExpansion eisenstein_qexp(const DirichletCharacter& chi, long prec, long ring) {
  if (chi.conductor() != chi.modulus())
    throw std::domain_error("eisenstein_qexp: character must be primitive");
  long f = chi.conductor();
  QExpansion out(f * f, 1, prec, ring);
  if (chi.is_trivial()) {
    out.coeff_index(0) = CycNum::from_rat(ring, Rat(-1, 24));
    out.rider() = CycNum::from_rat(ring, Rat(1, 2));
  }
  for (long n = 1; n <= prec; ++n) out.coeff_index(n) = sigma_chi(chi, n, ring);
  return out;
}

bool dirichlet_factorization_check(const EisensteinSeries& E, const DirichletCharacter& eta,
                                   long n_bound) {
  if (lgcd(eta.conductor(), E.level) != 1)
    throw std::domain_error("dirichlet_factorization_check: eta conductor shares a factor with the level");
  if (E.qexp.nmax() < n_bound)
    throw PrecisionError("dirichlet_factorization_check: series too short");
  const DirichletCharacter& chi = E.chi;
  long ring = llcm(E.ring, eta.order());

  // base convolution L(chi^{-1} eta, s) * L(chi eta, s-1)
  std::vector<CycNum> rhs(n_bound + 1, CycNum::zero(ring));
  for (long d = 1; d <= n_bound; ++d) {
    CycNum first = chi.value_inv(Int(d), ring) * eta.value(Int(d), ring);
    if (first.is_zero()) continue;
    for (long e = 1; d * e <= n_bound; ++e) {
      CycNum second = chi.value(Int(e), ring) * eta.value(Int(e), ring) * Rat(e);
      if (!second.is_zero()) rhs[d * e] += first * second;
    }
  }
  // sparse Euler factors
  for (long p : prime_factors(E.lbar)) {
    CycNum c = chi.value_inv(Int(p), ring) * eta.value(Int(p), ring);
    for (long n = n_bound; n >= p; --n)
      if (n % p == 0) rhs[n] -= c * rhs[n / p];
  }
  for (long p : prime_factors(E.mbar)) {
    CycNum c = chi.value(Int(p), ring) * eta.value(Int(p), ring) * Rat(p);
    for (long n = n_bound; n >= p; --n)
      if (n % p == 0) rhs[n] -= c * rhs[n / p];
  }

  for (long n = 1; n <= n_bound; ++n) {
    CycNum lhs = E.qexp.coeff_index(n).embed(ring) * eta.value(Int(n), ring);
    if (!(lhs == rhs[n])) return false;
  }
  return true;
}

EisensteinSeries build_series(const DirichletCharacter& chi, long mbar, long lbar, long prec) {
  if (chi.conductor() != chi.modulus())
    throw std::domain_error("build_series: character must be primitive");
  long f = chi.conductor();
  if (!is_squarefree(mbar) || !is_squarefree(lbar))
    throw std::domain_error("build_series: scaling integers must be squarefree");
  if (lgcd(mbar * lbar, f) != 1)
    throw std::domain_error("build_series: scaling integers must be coprime to the conductor");
  if (f * mbar <= 1)
    throw std::domain_error("build_series: conductor * mbar must exceed 1, the series would not be holomorphic");

  long ring = series_ring(chi);
  EisensteinSeries s{chi, mbar, lbar, f * f * mbar * lbar, ring,
                     eisenstein_phi(chi, ring), eisenstein_qexp(chi, prec, ring)};
  for (long p : prime_factors(mbar)) {
    CycNum chip = chi.value(Int(p), ring);
    s.phi = s.phi.scaled(p, -chip);
    s.qexp = op_plus(chi, p, s.qexp);
  }
  for (long p : prime_factors(lbar)) {
    CycNum chip_inv = chi.value_inv(Int(p), ring) * Rat(1, p);
    s.phi = s.phi.scaled(p, -chip_inv);
    s.qexp = op_minus(chi, p, s.qexp);
  }
  s.phi.set_level(s.level);
  s.qexp.set_level(s.level);
  return s;
}

}  // namespace eisen
