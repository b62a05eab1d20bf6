#include "eisen/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <shared_mutex>
#include <stdexcept>

namespace eisen {

namespace {

// quotient of integer polynomials, exact division assumed
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
  long dn = static_cast<long>(num.size()) - 1;
  long dd = static_cast<long>(den.size()) - 1;
  std::vector<Int> q(dn - dd + 1, Int(0));
  for (long i = dn; i >= dd; --i) {
    if (num[i] == 0) continue;
    Int c = num[i] / den[dd];
    q[i - dd] = c;
    for (long j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (const Int& c : num)
    if (c != 0) throw std::logic_error("poly_div_exact: division not exact");
  return q;
}

std::vector<Int> cyclotomic_poly(long m) {
  // Phi_m = (x^m - 1) / prod_{d|m, d<m} Phi_d
  std::vector<Int> num(m + 1, Int(0));
  num[0] = -1;
  num[m] = 1;
  for (long d : divisors(m)) {
    if (d == m) continue;
    num = poly_div_exact(num, cyclotomic_poly(d));
  }
  return num;
}

std::map<long, std::unique_ptr<CycRing>>& ring_cache() {
  static std::map<long, std::unique_ptr<CycRing>> cache;
  return cache;
}

std::shared_mutex& ring_mutex() {
  static std::shared_mutex mu;
  return mu;
}

}  // namespace

CycRing::CycRing(long m) : m_(m) {
  if (m < 1) throw std::domain_error("CycRing: conductor must be positive");
  cyclo_ = cyclotomic_poly(m);
  phi_ = static_cast<long>(cyclo_.size()) - 1;
  // zeta^k by repeated multiplication with x, reducing x^phi via Phi_m
  zpow_.assign(m, std::vector<Rat>(phi_, Rat(0)));
  std::vector<Rat> cur(phi_, Rat(0));
  cur[0] = 1;
  zpow_[0] = cur;
  for (long k = 1; k < m; ++k) {
    Rat top = cur[phi_ - 1];
    for (long i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      // x^phi = -(Phi_m - x^phi)
      for (long i = 0; i < phi_; ++i) cur[i] -= top * Rat(cyclo_[i]);
    }
    zpow_[k] = cur;
  }
}

const CycRing& CycRing::get(long m) {
  // ring lookups sit on every arithmetic operation; a per-thread memo of
  // the last hit keeps the shared cache out of the hot loops
  static thread_local long memo_m = 0;
  static thread_local const CycRing* memo = nullptr;
  if (memo_m == m) return *memo;
  {
    std::shared_lock lock(ring_mutex());
    auto& cache = ring_cache();
    auto it = cache.find(m);
    if (it != cache.end()) {
      memo_m = m;
      memo = it->second.get();
      return *memo;
    }
  }
  std::unique_lock lock(ring_mutex());
  auto& cache = ring_cache();
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, std::unique_ptr<CycRing>(new CycRing(m))).first;
  memo_m = m;
  memo = it->second.get();
  return *memo;
}

const std::vector<Rat>& CycRing::power(long k) const {
  k %= m_;
  if (k < 0) k += m_;
  return zpow_[k];
}

CycNum::CycNum(long m, std::vector<Rat> coeffs) : m_(m), c_(std::move(coeffs)) {
  if (static_cast<long>(c_.size()) != CycRing::get(m).degree())
    throw std::domain_error("CycNum: coefficient vector has wrong length");
}

CycNum CycNum::from_rat(long m, const Rat& r) {
  CycNum x(m);
  x.c_[0] = r;
  return x;
}

CycNum CycNum::root(long m, long k) {
  CycNum x(m);
  x.add_monomial(Rat(1), k);
  return x;
}

CycNum CycNum::unit_phase(long m, long a, long b) {
  if (b <= 0 || m % b != 0) throw std::domain_error("unit_phase: order does not divide ring conductor");
  long k = ((a % b) + b) % b;
  return root(m, k * (m / b));
}

bool CycNum::is_zero() const {
  for (const Rat& r : c_)
    if (r != 0) return false;
  return true;
}

bool CycNum::operator==(const CycNum& o) const { return m_ == o.m_ && c_ == o.c_; }

CycNum CycNum::operator-() const {
  CycNum x = *this;
  for (Rat& r : x.c_) r = -r;
  return x;
}

static void check_same_ring(long a, long b) {
  if (a != b) throw std::logic_error("CycNum: mixed-ring arithmetic (embed first)");
}

CycNum& CycNum::operator+=(const CycNum& o) {
  check_same_ring(m_, o.m_);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  check_same_ring(m_, o.m_);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycNum CycNum::operator+(const CycNum& o) const {
  CycNum x = *this;
  x += o;
  return x;
}

CycNum CycNum::operator-(const CycNum& o) const {
  CycNum x = *this;
  x -= o;
  return x;
}

CycNum CycNum::operator*(const CycNum& o) const {
  check_same_ring(m_, o.m_);
  const CycRing& R = CycRing::get(m_);
  long phi = R.degree();
  std::vector<Rat> buf(2 * phi - 1, Rat(0));
  for (long i = 0; i < phi; ++i) {
    if (c_[i] == 0) continue;
    for (long j = 0; j < phi; ++j) {
      if (o.c_[j] == 0) continue;
      buf[i + j] += c_[i] * o.c_[j];
    }
  }
  CycNum x(m_);
  for (long k = 0; k < phi && k < static_cast<long>(buf.size()); ++k) x.c_[k] = buf[k];
  for (long k = phi; k < static_cast<long>(buf.size()); ++k) {
    if (buf[k] == 0) continue;
    const std::vector<Rat>& row = R.power(k);
    for (long i = 0; i < phi; ++i)
      if (row[i] != 0) x.c_[i] += buf[k] * row[i];
  }
  return x;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  *this = *this * o;
  return *this;
}

CycNum& CycNum::operator*=(const Rat& r) {
  for (Rat& ci : c_) ci *= r;
  return *this;
}

CycNum CycNum::operator*(const Rat& r) const {
  CycNum x = *this;
  x *= r;
  return x;
}

void CycNum::addmul(const Rat& r, const CycNum& o) {
  check_same_ring(m_, o.m_);
  if (r == 0) return;
  // hot path of the expansion kernels: keep one scratch value per thread
  // instead of a fresh temporary per slot
  static thread_local Rat tmp;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (o.c_[i] == 0) continue;
    tmp = o.c_[i];
    tmp *= r;
    c_[i] += tmp;
  }
}

void CycNum::add_monomial(const Rat& r, long k) {
  if (r == 0) return;
  const CycRing& R = CycRing::get(m_);
  k %= m_;
  if (k < 0) k += m_;
  if (k < R.degree()) {
    c_[k] += r;
    return;
  }
  const std::vector<Rat>& row = R.power(k);
  for (size_t i = 0; i < c_.size(); ++i)
    if (row[i] != 0) c_[i] += r * row[i];
}

namespace {

// polynomial helpers over Rat for the extended Euclid in inverse()
using RPoly = std::vector<Rat>;

void rp_trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly rp_sub_scaled(RPoly a, const RPoly& b, const Rat& s, long shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, Rat(0));
  for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= s * b[i];
  rp_trim(a);
  return a;
}

// division with remainder: returns quotient, leaves remainder in a
RPoly rp_divmod(RPoly& a, const RPoly& b) {
  RPoly q;
  if (a.size() < b.size()) return q;
  q.assign(a.size() - b.size() + 1, Rat(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rat s = a.back() / b.back();
    long shift = static_cast<long>(a.size() - b.size());
    q[shift] = s;
    a = rp_sub_scaled(std::move(a), b, s, shift);
    if (a.empty()) break;
  }
  rp_trim(q);
  return q;
}

RPoly rp_mul(const RPoly& a, const RPoly& b) {
  if (a.empty() || b.empty()) return {};
  RPoly c(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  rp_trim(c);
  return c;
}

RPoly rp_sub(RPoly a, const RPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  rp_trim(a);
  return a;
}

}  // namespace

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("CycNum: inverse of zero");
  const CycRing& R = CycRing::get(m_);
  RPoly r0(R.cyclotomic().size());
  for (size_t i = 0; i < r0.size(); ++i) r0[i] = Rat(R.cyclotomic()[i]);
  RPoly r1(c_.begin(), c_.end());
  rp_trim(r1);
  RPoly s0 = {}, s1 = {Rat(1)};  // coefficients of *this in the Bezout identity
  while (!r1.empty()) {
    RPoly rem = r0;
    RPoly q = rp_divmod(rem, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    RPoly snew = rp_sub(s0, rp_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(snew);
  }
  if (r0.size() != 1) throw std::logic_error("CycNum: inverse failed, gcd not constant");
  Rat lead = r0[0];
  CycNum out(m_);
  // s0 may have degree >= phi only in degenerate cases; reduce defensively
  for (size_t k = 0; k < s0.size(); ++k)
    if (s0[k] != 0) out.add_monomial(s0[k] / lead, static_cast<long>(k));
  return out;
}

CycNum CycNum::galois(long j) const {
  j %= m_;
  if (j < 0) j += m_;
  if (lgcd(j, m_) != 1) throw std::domain_error("CycNum::galois: exponent not coprime to conductor");
  CycNum out(m_);
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) out.add_monomial(c_[i], static_cast<long>(i) * j);
  return out;
}

CycNum CycNum::embed(long M) const {
  if (M == m_) return *this;
  if (M % m_ != 0) throw std::domain_error("CycNum::embed: target conductor not a multiple");
  long step = M / m_;
  CycNum out(M);
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) out.add_monomial(c_[i], static_cast<long>(i) * step);
  return out;
}

std::optional<CycNum> CycNum::coerce(long d) const {
  if (d == m_) return *this;
  if (m_ % d != 0) throw std::domain_error("CycNum::coerce: target conductor does not divide");
  const CycRing& Rd = CycRing::get(d);
  long pd = Rd.degree();
  long pm = static_cast<long>(c_.size());
  // solve  sum_j x_j * embed(zeta_d^j) = *this  by Gaussian elimination
  std::vector<std::vector<Rat>> aug(pm, std::vector<Rat>(pd + 1, Rat(0)));
  for (long j = 0; j < pd; ++j) {
    CycNum bj = CycNum::root(d, j).embed(m_);
    for (long i = 0; i < pm; ++i) aug[i][j] = bj.coeffs()[i];
  }
  for (long i = 0; i < pm; ++i) aug[i][pd] = c_[i];
  long row = 0;
  std::vector<long> pivot_col(pd, -1);
  for (long col = 0; col < pd && row < pm; ++col) {
    long sel = -1;
    for (long i = row; i < pm; ++i)
      if (aug[i][col] != 0) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(aug[sel], aug[row]);
    Rat inv = Rat(1) / aug[row][col];
    for (long j = col; j <= pd; ++j) aug[row][j] *= inv;
    for (long i = 0; i < pm; ++i) {
      if (i == row || aug[i][col] == 0) continue;
      Rat f = aug[i][col];
      for (long j = col; j <= pd; ++j) aug[i][j] -= f * aug[row][j];
    }
    pivot_col[col] = row;
    ++row;
  }
  // consistency: rows beyond the pivots must have zero rhs
  for (long i = row; i < pm; ++i)
    if (aug[i][pd] != 0) return std::nullopt;
  std::vector<Rat> x(pd, Rat(0));
  for (long col = 0; col < pd; ++col)
    if (pivot_col[col] >= 0) x[col] = aug[pivot_col[col]][pd];
  return CycNum(d, std::move(x));
}

std::optional<Rat> CycNum::to_rat() const {
  // representation is canonical, so rationals occupy slot 0 only
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return std::nullopt;
  return c_[0];
}

std::vector<Int> CycNum::denominator_primes() const {
  std::set<Int> s;
  for (const Rat& r : c_)
    for (const Int& p : prime_factors(denominator(r))) s.insert(p);
  return std::vector<Int>(s.begin(), s.end());
}

}  // namespace eisen
