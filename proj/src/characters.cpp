#include "qeuler/characters.hpp"

#include <numeric>
#include <regex>

#include "qeuler/errors.hpp"
#include "qeuler/padic.hpp"

namespace qeuler {

namespace {

long mod_index(long a, unsigned long m) {
  long r = a % static_cast<long>(m);
  return r < 0 ? r + static_cast<long>(m) : r;
}

std::vector<std::pair<unsigned long, unsigned>> factorize(unsigned long n) {
  std::vector<std::pair<unsigned long, unsigned>> out;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

unsigned long powmod(unsigned long b, unsigned long e, unsigned long m) {
  unsigned long long r = 1 % m, x = b % m;
  while (e) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<unsigned long>(r);
}

// Generator of the cyclic group (Z/p^e)^*.
unsigned long prime_power_generator(unsigned long p, unsigned e) {
  unsigned long g = smallest_primitive_root(p);
  if (e >= 2 && powmod(g, p - 1, p * p) == 1) g += p;
  return g;
}

// One generator per prime-power factor, lifted by CRT (1 on the other factors).
std::vector<unsigned long> unit_generators(unsigned long m) {
  std::vector<unsigned long> gens;
  if (m == 1) return gens;
  for (auto [p, e] : factorize(m)) {
    const unsigned long pe = static_cast<unsigned long>(ipow(BigInt(p), e).get_ui());
    const unsigned long rest = m / pe;
    const unsigned long g = prime_power_generator(p, e);
    for (unsigned long x = 1; x < m; x += rest) {
      if (x % pe == g % pe) {
        gens.push_back(x);
        break;
      }
    }
  }
  return gens;
}

void require_odd(unsigned long modulus) {
  if (modulus == 0 || modulus % 2 == 0)
    throw DomainError("character modulus must be odd (conductor d odd), got " + std::to_string(modulus));
}

}  // namespace

DirichletCharacter::DirichletCharacter() : DirichletCharacter(1, {0}, 1, "trivial") {}

DirichletCharacter::DirichletCharacter(unsigned long modulus, std::vector<long> exponents, unsigned long order,
                                       std::string label)
    : modulus_(modulus), conductor_(modulus), order_(order), exps_(std::move(exponents)), label_(std::move(label)) {
  require_odd(modulus_);
  if (exps_.size() != modulus_) throw DomainError("character table size must equal the modulus");
  if (order_ == 0) throw DomainError("character order must be positive");
  normalize();
}

void DirichletCharacter::normalize() {
  for (unsigned long a = 0; a < modulus_; ++a) {
    const bool unit = std::gcd(a, modulus_) == 1;
    if (!unit) {
      exps_[a] = -1;
    } else {
      if (exps_[a] < 0) throw DomainError("character must be nonzero on units");
      exps_[a] %= static_cast<long>(order_);
    }
  }
  if (exps_[1 % modulus_] != 0) throw DomainError("character must satisfy chi(1) = 1");
  // Reduce to the exact order.
  unsigned long g = order_;
  for (long e : exps_) {
    if (e >= 0) g = std::gcd(g, static_cast<unsigned long>(e));
  }
  const unsigned long true_order = order_ / g;
  for (long& e : exps_) {
    if (e >= 0) e /= static_cast<long>(g);
  }
  order_ = true_order;
  // Multiplicativity against a generating set of the unit group.
  for (unsigned long b : unit_generators(modulus_)) {
    for (unsigned long a = 1; a < modulus_; ++a) {
      if (exps_[a] < 0) continue;
      if (exps_[a * b % modulus_] != (exps_[a] + exps_[b]) % static_cast<long>(order_))
        throw DomainError("character table is not multiplicative");
    }
  }
  conductor_ = modulus_;
  for (unsigned long d = 1; d < modulus_; ++d) {
    if (modulus_ % d) continue;
    bool factors = true;
    for (unsigned long a = 1; a < modulus_ && factors; a += d) {
      if (exps_[a] > 0) factors = false;
    }
    if (factors) {
      conductor_ = d;
      break;
    }
  }
}

DirichletCharacter DirichletCharacter::trivial(unsigned long modulus) {
  require_odd(modulus);
  return DirichletCharacter(modulus, std::vector<long>(modulus, 0), 1, "trivial mod " + std::to_string(modulus));
}

DirichletCharacter DirichletCharacter::quadratic(unsigned long f) {
  require_odd(f);
  std::vector<long> e(f, -1);
  for (unsigned long a = 0; a < f; ++a) {
    const int j = mpz_jacobi(BigInt(a).get_mpz_t(), BigInt(f).get_mpz_t());
    e[a] = j == 0 ? -1 : (j == 1 ? 0 : 1);
  }
  return DirichletCharacter(f, std::move(e), 2, "quadratic:" + std::to_string(f));
}

long DirichletCharacter::exponent(long a) const { return exps_[mod_index(a, modulus_)]; }

Cyclo DirichletCharacter::operator()(long a) const {
  const long e = exponent(a);
  if (e < 0) return Cyclo(0);
  return Cyclo::zeta(order_, e);
}

DirichletCharacter DirichletCharacter::primitive() const {
  if (is_primitive()) return *this;
  std::vector<long> e(conductor_, -1);
  for (unsigned long b = 0; b < conductor_; ++b) {
    if (std::gcd(b, conductor_) != 1) continue;
    for (unsigned long a = b; a < modulus_; a += conductor_) {
      if (std::gcd(a, modulus_) == 1) {
        e[b] = exps_[a];
        break;
      }
    }
  }
  return DirichletCharacter(conductor_, std::move(e), order_, label_ + " (primitive)");
}

DirichletCharacter DirichletCharacter::lift(unsigned long M) const {
  if (M % modulus_ != 0) throw DomainError("lift target must be a multiple of the modulus");
  std::vector<long> e(M);
  for (unsigned long a = 0; a < M; ++a) e[a] = std::gcd(a, M) == 1 ? exps_[a % modulus_] : -1;
  return DirichletCharacter(M, std::move(e), order_, label_);
}

DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b) {
  const unsigned long M = std::lcm(a.modulus_, b.modulus_);
  const unsigned long L = std::lcm(a.order_, b.order_);
  std::vector<long> e(M, -1);
  for (unsigned long x = 0; x < M; ++x) {
    const long ea = a.exps_[x % a.modulus_];
    const long eb = b.exps_[x % b.modulus_];
    if (ea < 0 || eb < 0) continue;
    e[x] = (ea * static_cast<long>(L / a.order_) + eb * static_cast<long>(L / b.order_)) % static_cast<long>(L);
  }
  return DirichletCharacter(M, std::move(e), L, a.label_ + "*" + b.label_);
}

bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
  return a.modulus_ == b.modulus_ && a.order_ == b.order_ && a.exps_ == b.exps_;
}

std::vector<DirichletCharacter> enumerate_characters(unsigned long modulus) {
  require_odd(modulus);
  if (modulus == 1) return {DirichletCharacter()};
  struct Component {
    unsigned long pe;     // p^e
    unsigned long phi;    // order of (Z/p^e)^*
    std::vector<long> index;  // discrete log base g on residues mod p^e, -1 off units
  };
  std::vector<Component> comps;
  for (auto [p, e] : factorize(modulus)) {
    Component c;
    c.pe = static_cast<unsigned long>(ipow(BigInt(p), e).get_ui());
    c.phi = c.pe / p * (p - 1);
    c.index.assign(c.pe, -1);
    const unsigned long g = prime_power_generator(p, e);
    unsigned long x = 1;
    for (unsigned long k = 0; k < c.phi; ++k) {
      c.index[x] = static_cast<long>(k);
      x = x * g % c.pe;
    }
    comps.push_back(std::move(c));
  }
  unsigned long L = 1;
  for (const auto& c : comps) L = std::lcm(L, c.phi);

  std::vector<DirichletCharacter> out;
  std::vector<unsigned long> k(comps.size(), 0);
  for (std::size_t idx = 0;; ++idx) {
    std::vector<long> e(modulus, -1);
    for (unsigned long a = 0; a < modulus; ++a) {
      if (std::gcd(a, modulus) != 1) continue;
      long total = 0;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        const long ind = comps[i].index[a % comps[i].pe];
        total += ind * static_cast<long>(k[i] * (L / comps[i].phi));
      }
      e[a] = total % static_cast<long>(L);
    }
    out.emplace_back(modulus, std::move(e), L, "f=" + std::to_string(modulus) + ",index=" + std::to_string(idx));
    // Lexicographic increment, last component fastest.
    std::size_t pos = comps.size();
    while (pos > 0) {
      --pos;
      if (++k[pos] < comps[pos].phi) break;
      k[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

DirichletCharacter teichmuller_character(unsigned long p) {
  if (!is_odd_prime(static_cast<long>(p))) throw DomainError(std::to_string(p) + " is not an odd prime");
  const unsigned long g = smallest_primitive_root(p);
  std::vector<long> e(p, -1);
  unsigned long x = 1;
  for (unsigned long k = 0; k + 1 < p; ++k) {
    e[x] = static_cast<long>(k);
    x = x * g % p;
  }
  return DirichletCharacter(p, std::move(e), p - 1, "omega_" + std::to_string(p));
}

DirichletCharacter twist_by_omega_power(const DirichletCharacter& chi, long n, unsigned long p) {
  DirichletCharacter omega = teichmuller_character(p);
  const long m = static_cast<long>(p - 1);
  long k = (-n) % m;
  if (k < 0) k += m;
  std::vector<long> e(p, -1);
  for (unsigned long a = 1; a < p; ++a) e[a] = (omega.exponent(static_cast<long>(a)) * k) % m;
  DirichletCharacter omega_k(p, std::move(e), p - 1, "omega^" + std::to_string(-n));
  DirichletCharacter out = chi * omega_k;
  return out;
}

DirichletCharacter parse_character(const std::string& spec) {
  if (spec == "trivial") return DirichletCharacter();
  static const std::regex quad(R"(quadratic:(\d+))");
  static const std::regex indexed(R"(f=(\d+),index=(\d+))");
  std::smatch m;
  if (std::regex_match(spec, m, quad)) return DirichletCharacter::quadratic(std::stoul(m[1]));
  if (std::regex_match(spec, m, indexed)) {
    const unsigned long f = std::stoul(m[1]);
    const unsigned long k = std::stoul(m[2]);
    auto all = enumerate_characters(f);
    if (k >= all.size())
      throw DomainError("character index " + std::to_string(k) + " out of range for modulus " + std::to_string(f));
    return all[k];
  }
  throw DomainError("unrecognized character spec '" + spec + "' (expected trivial, quadratic:<f>, f=<m>,index=<k>)");
}

}  // namespace qeuler
