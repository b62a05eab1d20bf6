#include "eisen/characters.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

namespace eisen {

namespace {

long unit_order(long a, long n) {
  long phi = euler_phi(n);
  long ord = phi;
  for (long p : prime_factors(phi))
    while (ord % p == 0 && power_mod(a, ord / p, n) == 1) ord /= p;
  return ord;
}

// smallest primitive root mod p^e, p odd prime
long primitive_root(long pe, long p) {
  long phi = euler_phi(pe);
  for (long a = 2; a < pe; ++a) {
    if (a % p == 0) continue;
    if (unit_order(a, pe) == phi) return a;
  }
  throw std::logic_error("primitive_root: none found");
}

std::map<long, std::unique_ptr<UnitGroup>>& group_cache() {
  static std::map<long, std::unique_ptr<UnitGroup>> cache;
  return cache;
}

std::shared_mutex& group_mutex() {
  static std::shared_mutex mu;
  return mu;
}

UnitGroup build_unit_group(long f) {
  UnitGroup G;
  G.modulus = f;
  if (f > 1) {
    // per prime-power factor, then CRT-lift each generator
    long n = f;
    std::vector<std::pair<long, long>> factors;  // (p, p^e)
    for (long p : prime_factors(f)) {
      long pe = 1;
      while (n % p == 0) { n /= p; pe *= p; }
      factors.emplace_back(p, pe);
    }
    for (auto [p, pe] : factors) {
      std::vector<std::pair<long, long>> local;  // (generator mod pe, order)
      if (p == 2) {
        if (pe == 2) {
          // trivial
        } else if (pe == 4) {
          local.emplace_back(3, 2);
        } else {
          local.emplace_back(pe - 1, 2);
          local.emplace_back(5, pe / 4);
        }
      } else {
        local.emplace_back(primitive_root(pe, p), euler_phi(pe));
      }
      for (auto [g, ord] : local) {
        // lift: congruent to g mod pe, to 1 mod f/pe
        long rest = f / pe;
        long lifted;
        if (rest == 1) {
          lifted = g % f;
        } else {
          long inv = inverse_mod(pe % rest, rest);
          // x = g + pe * t with x = 1 mod rest
          long t = static_cast<long>((static_cast<__int128>(((1 - g) % rest + rest) % rest) * inv) % rest);
          lifted = static_cast<long>(((static_cast<__int128>(pe) * t + g) % f + f) % f);
        }
        G.gens.push_back(lifted);
        G.orders.push_back(ord);
      }
    }
  }
  // full discrete-log table by enumerating exponent tuples
  std::vector<long> exp(G.gens.size(), 0);
  while (true) {
    long u = 1;
    for (size_t i = 0; i < G.gens.size(); ++i)
      u = static_cast<long>((static_cast<__int128>(u) * power_mod(G.gens[i], exp[i], f)) % f);
    if (f == 1) u = 0;
    G.dlog[u] = exp;
    size_t i = 0;
    for (; i < exp.size(); ++i) {
      if (++exp[i] < G.orders[i]) break;
      exp[i] = 0;
    }
    if (i == exp.size()) break;
    if (G.gens.empty()) break;
  }
  return G;
}

}  // namespace

const UnitGroup& UnitGroup::get(long f) {
  if (f < 1) throw std::domain_error("UnitGroup: modulus must be positive");
  static thread_local long memo_f = 0;
  static thread_local const UnitGroup* memo = nullptr;
  if (memo_f == f) return *memo;
  {
    std::shared_lock lock(group_mutex());
    auto& cache = group_cache();
    auto it = cache.find(f);
    if (it != cache.end()) {
      memo_f = f;
      memo = it->second.get();
      return *memo;
    }
  }
  std::unique_lock lock(group_mutex());
  auto& cache = group_cache();
  auto it = cache.find(f);
  if (it == cache.end())
    it = cache.emplace(f, std::make_unique<UnitGroup>(build_unit_group(f))).first;
  memo_f = f;
  memo = it->second.get();
  return *memo;
}

long UnitGroup::order() const {
  long n = 1;
  for (long d : orders) n *= d;
  return n;
}

DirichletCharacter::DirichletCharacter(long modulus, std::vector<long> exps)
    : modulus_(modulus), exps_(std::move(exps)) {
  const UnitGroup& G = UnitGroup::get(modulus);
  if (exps_.size() != G.gens.size())
    throw std::domain_error("DirichletCharacter: exponent vector length mismatch");
  order_ = 1;
  for (size_t i = 0; i < exps_.size(); ++i) {
    exps_[i] %= G.orders[i];
    if (exps_[i] < 0) exps_[i] += G.orders[i];
    if (exps_[i] != 0) order_ = llcm(order_, G.orders[i] / lgcd(G.orders[i], exps_[i]));
  }
  // conductor: smallest divisor f' of f through which the character factors
  conductor_ = modulus_;
  for (long d : divisors(modulus_)) {
    bool factors = true;
    for (long u = 1; u <= modulus_ && factors; ++u) {
      if (modulus_ > 1 && (lgcd(u, modulus_) != 1 || u % d != 1 % d)) continue;
      if (modulus_ == 1) break;
      auto it = G.dlog.find(u);
      Rat phase(0);
      for (size_t i = 0; i < exps_.size(); ++i)
        phase += Rat(exps_[i] * it->second[i], G.orders[i]);
      if (frac_part(phase) != 0) factors = false;
    }
    if (factors) { conductor_ = d; break; }
  }
}

std::optional<long> DirichletCharacter::value_index(const Int& n) const {
  long r = static_cast<long>(mod_positive(n, Int(modulus_)));
  const UnitGroup& G = UnitGroup::get(modulus_);
  if (modulus_ == 1) return 0;
  if (lgcd(r, modulus_) != 1) return std::nullopt;
  const std::vector<long>& a = G.dlog.at(r);
  Rat phase(0);
  for (size_t i = 0; i < exps_.size(); ++i)
    phase += Rat(exps_[i] * a[i], G.orders[i]);
  phase = frac_part(phase);
  // phase = k/order with exact divisibility
  Int k = numerator(phase) * (order_ / denominator(phase));
  return static_cast<long>(k);
}

CycNum DirichletCharacter::value(const Int& n, long ring) const {
  auto k = value_index(n);
  if (!k) return CycNum::zero(ring);
  return CycNum::unit_phase(ring, *k, order_);
}

CycNum DirichletCharacter::value_inv(const Int& n, long ring) const {
  auto k = value_index(n);
  if (!k) return CycNum::zero(ring);
  return CycNum::unit_phase(ring, -*k, order_);
}

int DirichletCharacter::parity() const {
  auto k = value_index(Int(modulus_ - 1));
  if (!k) return 1;  // modulus 1 or 2
  return (*k == 0) ? 1 : -1;
}

DirichletCharacter DirichletCharacter::inverse() const {
  const UnitGroup& G = UnitGroup::get(modulus_);
  std::vector<long> e(exps_.size());
  for (size_t i = 0; i < e.size(); ++i)
    e[i] = (G.orders[i] - exps_[i]) % G.orders[i];
  return DirichletCharacter(modulus_, std::move(e));
}

DirichletCharacter DirichletCharacter::primitive_part() const {
  if (conductor_ == modulus_) return *this;
  long f = conductor_;
  const UnitGroup& Gf = UnitGroup::get(f);
  std::vector<long> e(Gf.gens.size(), 0);
  for (size_t i = 0; i < Gf.gens.size(); ++i) {
    // lift the generator to a unit mod modulus_ in the same class mod f
    long g = Gf.gens[i];
    long lifted = g;
    while (lgcd(lifted, modulus_) != 1) lifted += f;
    auto k = value_index(Int(lifted));
    if (!k) throw std::logic_error("primitive_part: lift failed");
    // chi(lifted) = zeta_order^k must be a d_i-th root of unity
    long d = Gf.orders[i];
    if ((static_cast<__int128>(*k) * d) % order_ != 0)
      throw std::logic_error("primitive_part: value order mismatch");
    e[i] = static_cast<long>((static_cast<__int128>(*k) * d / order_) % d);
  }
  return DirichletCharacter(f, std::move(e));
}

DirichletCharacter DirichletCharacter::induce(long modulus) const {
  if (modulus % conductor_ != 0)
    throw std::domain_error("induce: conductor does not divide target modulus");
  DirichletCharacter prim = primitive_part();
  const UnitGroup& G = UnitGroup::get(modulus);
  std::vector<long> e(G.gens.size(), 0);
  for (size_t i = 0; i < G.gens.size(); ++i) {
    auto k = prim.value_index(Int(G.gens[i]));
    if (!k) throw std::logic_error("induce: generator not coprime to conductor");
    long d = G.orders[i];
    long ord = prim.order();
    if ((static_cast<__int128>(*k) * d) % ord != 0)
      throw std::logic_error("induce: value order mismatch");
    e[i] = static_cast<long>((static_cast<__int128>(*k) * d / ord) % d);
  }
  return DirichletCharacter(modulus, std::move(e));
}

DirichletCharacter DirichletCharacter::legendre(long p) {
  if (p == 2 || !is_prime(p)) throw std::domain_error("legendre: odd prime required");
  const UnitGroup& G = UnitGroup::get(p);
  std::vector<long> e = {G.orders[0] / 2};
  return DirichletCharacter(p, std::move(e));
}

DirichletCharacter multiply_coprime(const DirichletCharacter& a, const DirichletCharacter& b) {
  if (a.modulus() == b.modulus()) {
    const UnitGroup& G = UnitGroup::get(a.modulus());
    std::vector<long> e(G.gens.size());
    for (size_t i = 0; i < e.size(); ++i)
      e[i] = (a.exponents()[i] + b.exponents()[i]) % G.orders[i];
    return DirichletCharacter(a.modulus(), std::move(e));
  }
  if (lgcd(a.modulus(), b.modulus()) != 1)
    throw std::domain_error("multiply_coprime: moduli share a factor");
  long f = a.modulus() * b.modulus();
  const UnitGroup& G = UnitGroup::get(f);
  std::vector<long> e(G.gens.size(), 0);
  for (size_t i = 0; i < G.gens.size(); ++i) {
    long g = G.gens[i];
    auto ka = a.value_index(Int(g));
    auto kb = b.value_index(Int(g));
    if (!ka || !kb) throw std::logic_error("multiply_coprime: generator not a unit");
    Rat phase = frac_part(Rat(*ka, a.order()) + Rat(*kb, b.order()));
    long d = G.orders[i];
    Int num = numerator(phase) * (Int(d) / denominator(phase));
    e[i] = static_cast<long>(num % d);
  }
  return DirichletCharacter(f, std::move(e));
}

std::vector<DirichletCharacter> all_characters(long f) {
  const UnitGroup& G = UnitGroup::get(f);
  std::vector<DirichletCharacter> out;
  std::vector<long> exp(G.gens.size(), 0);
  while (true) {
    out.emplace_back(f, exp);
    size_t i = 0;
    for (; i < exp.size(); ++i) {
      if (++exp[i] < G.orders[i]) break;
      exp[i] = 0;
    }
    if (i == exp.size()) break;
  }
  return out;
}

std::vector<DirichletCharacter> primitive_characters(long f) {
  std::vector<DirichletCharacter> out;
  for (auto& chi : all_characters(f))
    if (chi.conductor() == f) out.push_back(chi);
  return out;
}

DirichletCharacter teichmuller_lift(long f, const std::vector<long>& exps_q, long q) {
  if (q % 2 == 0) throw std::domain_error("teichmuller_lift: even characteristic not supported");
  if (q < 3) throw std::domain_error("teichmuller_lift: field size must be at least 3");
  const UnitGroup& G = UnitGroup::get(f);
  if (exps_q.size() != G.gens.size())
    throw std::domain_error("teichmuller_lift: exponent vector length mismatch");
  long n = q - 1;
  std::vector<long> e(G.gens.size(), 0);
  for (size_t i = 0; i < G.gens.size(); ++i) {
    long a = ((exps_q[i] % n) + n) % n;
    long d = G.orders[i];
    // homomorphism: d * a = 0 mod q-1, so a = e_i * (q-1)/d
    if ((static_cast<__int128>(a) * d) % n != 0)
      throw std::domain_error("teichmuller_lift: exponents do not define a homomorphism");
    e[i] = static_cast<long>((static_cast<__int128>(a) * d / n) % d);
  }
  return DirichletCharacter(f, std::move(e));
}

std::vector<EtaCharacter> enumerate_eta(long N, long bound) {
  std::vector<EtaCharacter> out;
  for (long p = 3; p <= bound; p += 2) {
    if (!is_prime(p)) continue;
    if ((p + 1) % (4 * N) != 0) continue;
    DirichletCharacter leg = DirichletCharacter::legendre(p);
    for (auto& eta : all_characters(p)) {
      if (eta.order() <= 2) continue;
      out.push_back({eta, multiply_coprime(eta, leg)});
    }
  }
  return out;
}

}  // namespace eisen
