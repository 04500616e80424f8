#include "qeuler/padic.hpp"

#include <algorithm>
#include <sstream>

#include "qeuler/errors.hpp"

namespace qeuler {

namespace {

void require_same_prime(unsigned long p, unsigned long q) {
  if (p != q) throw DomainError("mixing p-adic scalars for p = " + std::to_string(p) + " and " + std::to_string(q));
}

long residue_valuation(const BigInt& v, unsigned long p, long prec) {
  if (v == 0) return prec;
  return std::min(valuation(v, p), prec);
}

BigInt mod_positive(const BigInt& x, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

// ---------------------------------------------------------------- PadicScalar

PadicScalar::PadicScalar(unsigned long p, long cap, const BigInt& value)
    : PadicScalar(p, cap, value, cap) {}

PadicScalar::PadicScalar(unsigned long p, long cap, const BigInt& value, long precision)
    : p_(p), cap_(cap), prec_(precision), value_(value) {
  if (!is_odd_prime(static_cast<long>(p))) throw DomainError(std::to_string(p) + " is not an odd prime");
  if (cap < 1) throw DomainError("p-adic precision must be positive");
  normalize();
}

void PadicScalar::normalize() {
  if (prec_ > cap_) prec_ = cap_;
  if (prec_ < 0) throw PrecisionError("p-adic precision exhausted");
  modulus_ = ipow(BigInt(p_), static_cast<unsigned long>(prec_));
  value_ = mod_positive(value_, modulus_);
}

PadicScalar PadicScalar::from_rational(unsigned long p, long cap, const Rational& r) {
  if (r == 0) return PadicScalar(p, cap, 0);
  if (qeuler::valuation(r, p) < 0)
    throw DomainError(r.get_str() + " is not " + std::to_string(p) + "-integral");
  BigInt mod = ipow(BigInt(p), static_cast<unsigned long>(cap));
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), BigInt(r.get_den()).get_mpz_t(), mod.get_mpz_t());
  return PadicScalar(p, cap, BigInt(r.get_num()) * inv);
}

BigInt PadicScalar::centered() const {
  if (2 * value_ > modulus_) return value_ - modulus_;
  return value_;
}

long PadicScalar::valuation() const { return residue_valuation(value_, p_, prec_); }

PadicScalar PadicScalar::with_precision(long precision) const {
  return PadicScalar(p_, cap_, value_, std::min(precision, prec_));
}

PadicScalar PadicScalar::with_cap(long cap) const {
  return PadicScalar(p_, cap, value_, std::min(prec_, cap));
}

PadicScalar PadicScalar::inverse() const { return PadicScalar(p_, cap_, 1) / *this; }

PadicScalar PadicScalar::operator-() const { return PadicScalar(p_, cap_, -value_, prec_); }

PadicScalar& PadicScalar::operator+=(const PadicScalar& rhs) {
  require_same_prime(p_, rhs.p_);
  cap_ = std::min(cap_, rhs.cap_);
  prec_ = std::min(prec_, rhs.prec_);
  value_ += rhs.value_;
  normalize();
  return *this;
}

PadicScalar& PadicScalar::operator-=(const PadicScalar& rhs) {
  require_same_prime(p_, rhs.p_);
  cap_ = std::min(cap_, rhs.cap_);
  prec_ = std::min(prec_, rhs.prec_);
  value_ -= rhs.value_;
  normalize();
  return *this;
}

PadicScalar& PadicScalar::operator*=(const PadicScalar& rhs) {
  require_same_prime(p_, rhs.p_);
  const long va = valuation();
  const long vb = rhs.valuation();
  cap_ = std::min(cap_, rhs.cap_);
  prec_ = std::min({prec_ + vb, rhs.prec_ + va, cap_});
  value_ *= rhs.value_;
  normalize();
  return *this;
}

PadicScalar& PadicScalar::operator/=(const PadicScalar& rhs) {
  require_same_prime(p_, rhs.p_);
  const long k = rhs.valuation();
  if (k >= rhs.prec_)
    throw PrecisionError("division by a p-adic scalar indistinguishable from zero (" + rhs.to_string() + ")");
  const long va = valuation();
  if (va < k) {
    if (va < prec_) throw DomainError("quotient " + to_string() + " / " + rhs.to_string() + " is not p-integral");
    throw PrecisionError("numerator precision too small for division by p^" + std::to_string(k));
  }
  cap_ = std::min(cap_, rhs.cap_);
  const long prec = std::min({prec_ - k, rhs.prec_ - 2 * k + va, cap_});
  BigInt pk = ipow(BigInt(p_), static_cast<unsigned long>(k));
  BigInt num, unit;
  mpz_divexact(num.get_mpz_t(), value_.get_mpz_t(), pk.get_mpz_t());
  mpz_divexact(unit.get_mpz_t(), rhs.value_.get_mpz_t(), pk.get_mpz_t());
  prec_ = prec;
  normalize();
  BigInt inv;
  if (prec_ > 0) mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), modulus_.get_mpz_t());
  value_ = num * inv;
  normalize();
  return *this;
}

bool operator==(const PadicScalar& a, const PadicScalar& b) {
  if (a.p_ != b.p_) return false;
  const long prec = std::min(a.prec_, b.prec_);
  BigInt m = ipow(BigInt(a.p_), static_cast<unsigned long>(prec));
  return mod_positive(a.value_ - b.value_, m) == 0;
}

std::string PadicScalar::to_string() const {
  return value_.get_str() + " mod " + std::to_string(p_) + "^" + std::to_string(prec_);
}

PadicScalar pow(const PadicScalar& x, long k) {
  if (k < 0) return pow(x.inverse(), -k);
  PadicScalar result = one_like(x);
  PadicScalar base = x;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

PadicScalar rational_power(const PadicScalar& x, const Rational& e) {
  if (e.get_den() != 1) throw DomainError("p-adic q^e needs an integral exponent here, got " + to_string(e));
  return pow(x, e.get_num().get_si());
}

long distance_valuation(const PadicScalar& a, const PadicScalar& b) { return (a - b).valuation(); }

// ------------------------------------------------------------- RamifiedScalar

namespace {

// pi^(p-1) = sum_k relation[k] pi^k, from Phi_p(1 + pi) = 0.
std::vector<BigInt> eisenstein_relation(unsigned long p) {
  std::vector<BigInt> r(p - 1);
  BigInt binom = 1;  // C(p, 0)
  for (unsigned long k = 0; k + 1 < p; ++k) {
    binom = binom * BigInt(p - k) / BigInt(k + 1);  // C(p, k + 1)
    r[k] = -binom;
  }
  return r;
}

}  // namespace

RamifiedScalar::RamifiedScalar(const PadicScalar& base)
    : p_(base.prime()), cap_(base.cap()), prec_(base.precision()), c_(base.prime() - 1, BigInt(0)) {
  c_[0] = base.residue();
  normalize();
}

RamifiedScalar::RamifiedScalar(unsigned long p, long cap, std::vector<BigInt> coeffs, long precision)
    : p_(p), cap_(cap), prec_(precision), c_(std::move(coeffs)) {
  if (!is_odd_prime(static_cast<long>(p))) throw DomainError(std::to_string(p) + " is not an odd prime");
  if (c_.size() != p - 1) throw DomainError("ramified scalar needs p - 1 coefficients");
  normalize();
}

void RamifiedScalar::normalize() {
  if (prec_ > cap_) prec_ = cap_;
  if (prec_ < 0) throw PrecisionError("p-adic precision exhausted");
  modulus_ = ipow(BigInt(p_), static_cast<unsigned long>(prec_));
  for (auto& c : c_) c = mod_positive(c, modulus_);
}

RamifiedScalar RamifiedScalar::pi(unsigned long p, long cap) {
  std::vector<BigInt> c(p - 1, BigInt(0));
  c[1] = 1;
  return RamifiedScalar(p, cap, std::move(c), cap);
}

RamifiedScalar RamifiedScalar::xi_power(unsigned long p, long cap, long k) {
  long e = k % static_cast<long>(p);
  if (e < 0) e += static_cast<long>(p);
  RamifiedScalar one(PadicScalar(p, cap, 1));
  return pow(one + pi(p, cap), e);
}

long RamifiedScalar::valuation_units() const {
  const long e = degree();
  long best = e * prec_;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    best = std::min(best, e * qeuler::valuation(c_[i], p_) + static_cast<long>(i));
  }
  return best;
}

Rational RamifiedScalar::valuation() const { return make_rational(valuation_units(), degree()); }

bool RamifiedScalar::is_unit() const { return prec_ > 0 && !mpz_divisible_ui_p(c_[0].get_mpz_t(), p_); }

bool RamifiedScalar::in_base_ring() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const BigInt& c) { return c == 0; });
}

PadicScalar RamifiedScalar::base_part() const {
  if (!in_base_ring()) throw DomainError("ramified scalar " + to_string() + " is not in Z_p");
  return PadicScalar(p_, cap_, c_[0], prec_);
}

unsigned long RamifiedScalar::reduce_mod_pi() const {
  return mpz_fdiv_ui(c_[0].get_mpz_t(), p_);
}

RamifiedScalar RamifiedScalar::with_precision(long precision) const {
  return RamifiedScalar(p_, cap_, c_, std::min(precision, prec_));
}

RamifiedScalar RamifiedScalar::with_cap(long cap) const {
  return RamifiedScalar(p_, cap, c_, std::min(prec_, cap));
}

RamifiedScalar RamifiedScalar::operator-() const {
  RamifiedScalar r = *this;
  for (auto& c : r.c_) c = -c;
  r.normalize();
  return r;
}

RamifiedScalar& RamifiedScalar::operator+=(const RamifiedScalar& rhs) {
  require_same_prime(p_, rhs.p_);
  cap_ = std::min(cap_, rhs.cap_);
  prec_ = std::min(prec_, rhs.prec_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  normalize();
  return *this;
}

RamifiedScalar& RamifiedScalar::operator-=(const RamifiedScalar& rhs) {
  require_same_prime(p_, rhs.p_);
  cap_ = std::min(cap_, rhs.cap_);
  prec_ = std::min(prec_, rhs.prec_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  normalize();
  return *this;
}

RamifiedScalar& RamifiedScalar::operator*=(const RamifiedScalar& rhs) {
  require_same_prime(p_, rhs.p_);
  const long e = degree();
  const long va = valuation_units() / e;
  const long vb = rhs.valuation_units() / e;
  cap_ = std::min(cap_, rhs.cap_);
  prec_ = std::min({prec_ + vb, rhs.prec_ + va, cap_});
  if (rhs.in_base_ring()) {
    for (auto& c : c_) c *= rhs.c_[0];
    normalize();
    return *this;
  }
  std::vector<BigInt> prod(2 * c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
      if (rhs.c_[j] != 0) prod[i + j] += c_[i] * rhs.c_[j];
    }
  }
  static thread_local unsigned long cached_p = 0;
  static thread_local std::vector<BigInt> relation;
  if (cached_p != p_) {
    relation = eisenstein_relation(p_);
    cached_p = p_;
  }
  for (std::size_t i = prod.size(); i-- > c_.size();) {
    if (prod[i] == 0) continue;
    BigInt top = prod[i];
    for (std::size_t k = 0; k < relation.size(); ++k) prod[i - c_.size() + k] += top * relation[k];
    prod[i] = 0;
  }
  prod.resize(c_.size());
  c_ = std::move(prod);
  normalize();
  return *this;
}

RamifiedScalar& RamifiedScalar::operator*=(const PadicScalar& rhs) { return *this *= RamifiedScalar(rhs); }

RamifiedScalar RamifiedScalar::divided_by_p_power(long j) const {
  if (j > prec_) throw PrecisionError("p-adic precision exhausted");
  const BigInt pj = ipow(BigInt(p_), static_cast<unsigned long>(j));
  std::vector<BigInt> out(c_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!mpz_divisible_p(c_[i].get_mpz_t(), pj.get_mpz_t()))
      throw DomainError("ramified scalar " + to_string() + " is not divisible by the denominator");
    mpz_divexact(out[i].get_mpz_t(), c_[i].get_mpz_t(), pj.get_mpz_t());
  }
  return RamifiedScalar(p_, cap_, std::move(out), prec_ - j);
}

RamifiedScalar RamifiedScalar::inverse() const {
  if (!is_unit()) throw DomainError("ramified scalar " + to_string() + " is not a unit");
  BigInt inv0;
  mpz_invert(inv0.get_mpz_t(), c_[0].get_mpz_t(), modulus_.get_mpz_t());
  RamifiedScalar x = RamifiedScalar(PadicScalar(p_, cap_, inv0, prec_));
  const RamifiedScalar two(PadicScalar(p_, cap_, 2));
  // Newton: the pi-adic valuation of 1 - u x doubles every step.
  const long target = degree() * prec_;
  for (int iter = 0; iter < 64; ++iter) {
    RamifiedScalar ux = *this * x;
    RamifiedScalar err = one_like(*this) - ux;
    if (err.valuation_units() >= target) break;
    x = x * (two - ux);
    x.prec_ = prec_;
    x.normalize();
  }
  x.prec_ = prec_;
  x.normalize();
  return x;
}

RamifiedScalar& RamifiedScalar::operator/=(const RamifiedScalar& rhs) {
  require_same_prime(p_, rhs.p_);
  if (rhs.valuation_units() >= rhs.degree() * rhs.prec_)
    throw PrecisionError("division by a ramified scalar indistinguishable from zero");
  if (rhs.in_base_ring() && in_base_ring()) {
    *this = RamifiedScalar(base_part() / rhs.base_part());
    return *this;
  }
  // v(rhs) = k/(p-1); after scaling both sides by pi^s, s = -k mod (p-1),
  // rhs is p^j times a unit with j = ceil(k/(p-1)).
  const long k = rhs.valuation_units();
  RamifiedScalar num = *this;
  RamifiedScalar den = rhs;
  if (k > 0) {
    const long d = degree();
    const long j = (k + d - 1) / d;
    const RamifiedScalar shift = pow(RamifiedScalar::pi(p_, std::max(cap_, rhs.cap_)), j * d - k);
    num = (num * shift).divided_by_p_power(j);
    den = (den * shift).divided_by_p_power(j);
  }
  *this = num * den.inverse();
  return *this;
}

bool operator==(const RamifiedScalar& a, const RamifiedScalar& b) {
  if (a.p_ != b.p_) return false;
  return distance_valuation_units(a, b) >= a.degree() * std::min(a.prec_, b.prec_);
}

std::string RamifiedScalar::to_string() const {
  if (in_base_ring()) return base_part().to_string();
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i].get_str();
  }
  os << "] mod " << p_ << '^' << prec_ << " (pi-basis)";
  return os.str();
}

RamifiedScalar pow(const RamifiedScalar& x, long k) {
  if (k < 0) return pow(x.inverse(), -k);
  RamifiedScalar result = one_like(x);
  RamifiedScalar base = x;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

RamifiedScalar rational_power(const RamifiedScalar& x, const Rational& e) {
  if (e.get_den() != 1) throw DomainError("p-adic q^e needs an integral exponent here, got " + to_string(e));
  return pow(x, e.get_num().get_si());
}

long distance_valuation_units(const RamifiedScalar& a, const RamifiedScalar& b) {
  return (a - b).valuation_units();
}

// ---------------------------------------------------------------- Teichmueller

unsigned long smallest_primitive_root(unsigned long p) {
  if (!is_odd_prime(static_cast<long>(p))) throw DomainError(std::to_string(p) + " is not an odd prime");
  std::vector<unsigned long> factors;
  unsigned long n = p - 1;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) factors.push_back(n);
  for (unsigned long g = 2; g < p; ++g) {
    bool ok = true;
    for (unsigned long f : factors) {
      BigInt r;
      mpz_powm_ui(r.get_mpz_t(), BigInt(g).get_mpz_t(), (p - 1) / f, BigInt(p).get_mpz_t());
      if (r == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;  // p = 3 handled above (g = 2); unreachable for odd primes
}

PadicScalar teichmuller(long a, unsigned long p, long N) {
  if (!is_odd_prime(static_cast<long>(p))) throw DomainError(std::to_string(p) + " is not an odd prime");
  if (a % static_cast<long>(p) == 0)
    throw DomainError("Teichmueller character needs a unit, got " + std::to_string(a));
  BigInt mod = ipow(BigInt(p), static_cast<unsigned long>(N));
  BigInt x = mod_positive(BigInt(a), mod);
  for (long i = 0; i < N; ++i) {
    BigInt next;
    mpz_powm_ui(next.get_mpz_t(), x.get_mpz_t(), p, mod.get_mpz_t());
    if (next == x) break;
    x = next;
  }
  return PadicScalar(p, N, x);
}

// ------------------------------------------------------------ PadicEmbedding

PadicEmbedding::PadicEmbedding(unsigned long p, long cap)
    : p_(p), cap_(cap), g_(smallest_primitive_root(p)), omega_g_(teichmuller(static_cast<long>(g_), p, cap)) {}

bool PadicEmbedding::embeds(unsigned long m) const {
  if (m == 0) return false;
  unsigned long rest = m % p_ == 0 ? m / p_ : m;
  return (p_ - 1) % rest == 0;
}

RamifiedScalar PadicEmbedding::image_of_zeta(unsigned long m) const {
  if (!embeds(m))
    throw DomainError("Q(zeta_" + std::to_string(m) + ") does not embed in Q_" + std::to_string(p_) +
                      "(xi_p): order must divide p(p-1)");
  const bool ramified = m % p_ == 0;
  const unsigned long mp = ramified ? m / p_ : m;
  RamifiedScalar z = one_like(RamifiedScalar(PadicScalar(p_, cap_, 1)));
  if (ramified) {
    // alpha = mp^{-1} mod p so that z^{mp} = 1 + pi.
    long alpha = 1;
    while ((alpha * static_cast<long>(mp)) % static_cast<long>(p_) != 1) ++alpha;
    z = RamifiedScalar::xi_power(p_, cap_, alpha);
  }
  if (mp > 1) {
    long beta = 1;
    if (ramified) {
      while ((beta * static_cast<long>(p_)) % static_cast<long>(mp) != 1 % static_cast<long>(mp)) ++beta;
    }
    z *= pow(omega_g_, beta * static_cast<long>((p_ - 1) / mp));
  }
  return z;
}

RamifiedScalar PadicEmbedding::operator()(const Cyclo& x) const {
  const auto& c = x.coefficients();
  if (x.is_rational()) return RamifiedScalar((*this)(x.rational_value()));
  const RamifiedScalar z = image_of_zeta(x.order());
  RamifiedScalar acc((*this)(c.back()));
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc *= z;
    acc += RamifiedScalar((*this)(c[i]));
  }
  return acc;
}

PadicScalar PadicEmbedding::operator()(const Rational& x) const { return PadicScalar::from_rational(p_, cap_, x); }

}  // namespace qeuler
