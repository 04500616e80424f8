#include "qeuler/padic_core.hpp"

#include "qeuler/errors.hpp"

namespace qeuler {

long XDomain::size() const {
  if (d == 0 || d % 2 == 0) throw DomainError("X_d needs an odd d");
  if (N < 0) throw DomainError("level must be >= 0");
  BigInt m = BigInt(d) * ipow(BigInt(p), static_cast<unsigned long>(N));
  if (!m.fits_slong_p() || m > BigInt(400000000)) throw DomainError("level d p^N too large for a Riemann sum");
  return m.get_si();
}

void validate_padic_q(const PadicScalar& q) {
  const PadicScalar diff = one_like(q) - q;
  if (diff.valuation() < 1)
    throw DomainError("p-adic mode needs |1 - q|_p < p^{-1/(p-1)}, i.e. q = 1 mod p; got q = " + q.to_string());
}

PadicScalar angle_bracket(long a, const PadicScalar& q) {
  const unsigned long p = q.prime();
  if (a % static_cast<long>(p) == 0) throw DomainError("<a> needs (a, p) = 1, got a = " + std::to_string(a));
  validate_padic_q(q);
  const PadicScalar bracket = q_bracket(a, q);
  const PadicScalar omega = teichmuller(a, p, q.cap());
  PadicScalar out = bracket / omega;
  if ((out - one_like(out)).valuation() < 1) throw Error("<a> is not a 1-unit: " + out.to_string());
  return out;
}

PadicScalar one_unit_power(const PadicScalar& u, const PadicScalar& s, long N) {
  const unsigned long p = u.prime();
  if (s.prime() != p) throw DomainError("exponent and base live over different primes");
  const PadicScalar t = u - one_like(u);
  const long v = t.valuation();
  if (v < 1) throw DomainError("u^s needs a 1-unit u, got " + u.to_string());
  if (v >= t.precision()) return PadicScalar(p, N, 1, std::min(N, u.precision()));
  long J = 1;
  while (J * v - factorial_valuation(J, p) < N) {
    if (++J > 1000000)
      throw PrecisionError("u^s series cannot reach precision " + std::to_string(N) + " with v(u-1) = " + std::to_string(v));
  }
  const long W = N + factorial_valuation(J - 1, p) + 2;
  const PadicScalar tw = t.with_cap(W);
  const PadicScalar sw = s.with_cap(W);
  PadicScalar sum(p, W, 0);
  PadicScalar tj(p, W, 1);
  for (long j = 0; j < J; ++j) {
    sum += gen_binomial(sw, j) * tj;
    tj *= tw;
  }
  return sum.with_cap(N);
}

PadicScalar unit_power(const PadicScalar& u, const PadicExponent& s, long N) {
  if (s.integer) return pow(u.with_cap(N), *s.integer);
  return one_unit_power(u, s.as_padic(u.prime(), N), N);
}

RamifiedScalar q_moment_riemann_sum(long n, long x, long h, const PadicScalar& q, const RamifiedScalar& xi,
                               const XDomain& dom) {
  validate_padic_q(q);
  if (x < 0) throw DomainError("the Riemann-sum oracle takes x >= 0");
  const long M = dom.size();
  const bool untwisted = xi == one_like(xi) && xi.in_base_ring();
  // (-1)^y q^{(h-1)y} q^y xi^y [x+y]_q^n, then / [M]_{-q}.
  const PadicScalar step = -pow(q, h);
  PadicScalar bracket = q_bracket(x, q);
  PadicScalar qxy = pow(q, x);
  PadicScalar w = one_like(q);
  PadicScalar base_sum = scalar_like(q, 0);
  RamifiedScalar sum = scalar_like(xi, 0);
  RamifiedScalar xi_y = one_like(xi);
  for (long y = 0; y < M; ++y) {
    const PadicScalar term = w * pow(bracket, n);
    if (untwisted) {
      base_sum += term;
    } else {
      sum += xi_y * term;
      xi_y *= xi;
    }
    bracket += qxy;
    qxy *= q;
    w *= step;
  }
  if (untwisted) sum = RamifiedScalar(base_sum);
  return sum / RamifiedScalar(neg_q_bracket(M, q));
}

}  // namespace qeuler
