#pragma once

#include <optional>
#include <string>

#include "qeuler/binomial.hpp"
#include "qeuler/padic.hpp"
#include "qeuler/qkit.hpp"
#include "qeuler/report.hpp"

namespace qeuler {

/// Finite level Z/(d p^N) of X = lim Z/(d p^N).
struct XDomain {
  unsigned long d = 1;
  unsigned long p = 3;
  long N = 1;

  long size() const;
  XDomain coarser() const { return XDomain{d, p, N - 1}; }
};

/// Rejects unless v_p(1 - q) >= 1, i.e. |1 - q|_p < p^{-1/(p-1)} for q in Z_p.
void validate_padic_q(const PadicScalar& q);

/// <a> = [a]_q / omega(a); a 1-unit (checked).
PadicScalar angle_bracket(long a, const PadicScalar& q);

/// u^s = sum_j C(s,j) (u-1)^j for a 1-unit u and s in Z_p, to precision N.
/// Terms stop at the smallest J with J v(u-1) - v_p(J!) >= N; the working
/// cap is raised by max_{j<J} v_p(j!) so the result is certified to N when
/// u and s are.
PadicScalar one_unit_power(const PadicScalar& u, const PadicScalar& s, long N);

/// Exponent s in Z_p; integers are kept separately so u^s can use repeated
/// multiplication.
struct PadicExponent {
  std::optional<long> integer;
  std::optional<Rational> rational;

  static PadicExponent of(long s) { return PadicExponent{s, Rational(s)}; }
  /// s must be p-integral when used.
  static PadicExponent of(const Rational& s) {
    if (s.get_den() == 1 && s.get_num().fits_slong_p()) return of(s.get_num().get_si());
    return PadicExponent{std::nullopt, s};
  }
  PadicScalar as_padic(unsigned long p, long cap) const { return PadicScalar::from_rational(p, cap, *rational); }
  PadicExponent negated() const {
    PadicExponent e;
    if (integer) e.integer = -*integer;
    e.rational = -*rational;
    return e;
  }
  std::string to_string() const { return qeuler::to_string(*rational); }
};

/// u^s for a 1-unit u.
PadicScalar unit_power(const PadicScalar& u, const PadicExponent& s, long N);

enum class Measure {
  bosonic,      // I_q:    (1/[M]_q)    sum f(x) q^x
  fermionic,    // I_{-q}: (1/[M]_{-q}) sum f(x) (-q)^x
  alternating,  // I_{-1}: sum f(x) (-1)^x
};

template <class S>
struct IntegralResult {
  S value;
  std::optional<S> previous;  // level N - 1, when N >= 1
  long level = 0;
};

/// Riemann sum of f over x = 0 .. M-1, M = d p^N.
template <class S, class Fn>
S riemann_sum(Fn&& f, Measure m, const S& q, long M) {
  S sum = scalar_like(q, 0);
  S w = one_like(q);
  S step = m == Measure::bosonic ? q : (m == Measure::fermionic ? S(-q) : S(-one_like(q)));
  for (long x = 0; x < M; ++x) {
    sum = sum + f(x) * w;
    w = w * step;
  }
  if (m == Measure::bosonic) return sum / q_bracket(M, q);
  if (m == Measure::fermionic) return sum / neg_q_bracket(M, q);
  return sum;
}

/// The finite-level integral and the previous level's value.
template <class S, class Fn>
IntegralResult<S> fermionic_integral(Fn&& f, Measure m, const S& q, const XDomain& dom) {
  IntegralResult<S> r{riemann_sum<S>(f, m, q, dom.size()), std::nullopt, dom.N};
  if (dom.N >= 1) r.previous = riemann_sum<S>(f, m, q, dom.coarser().size());
  return r;
}

/// I_{-1}(f_n) against (-1)^n I_{-1}(f) + 2 sum_{l<n} (-1)^{n-1-l} f(l), f_n(x) = f(x+n),
/// both at level dom.N; passes when they agree mod p^{N-c}.
template <class S, class Fn>
VerificationReport check_functional_equation(Fn&& f, long n, const XDomain& dom, long c, const S& like) {
  if (n < 1) throw DomainError("functional equation needs n >= 1");
  const long M = dom.size();
  const S minus_one = -one_like(like);
  const S lhs = riemann_sum<S>([&](long x) { return f(x + n); }, Measure::alternating, minus_one, M);
  S rhs = riemann_sum<S>(f, Measure::alternating, minus_one, M);
  if (n % 2) rhs = -rhs;
  for (long l = 0; l < n; ++l) {
    const S term = scalar_like(like, Rational((n - 1 - l) % 2 ? -2 : 2)) * f(l);
    rhs = rhs + term;
  }
  nlohmann::ordered_json params;
  params["p"] = dom.p;
  params["d"] = dom.d;
  params["N"] = dom.N;
  params["n"] = n;
  params["c"] = c;
  params["form"] = n % 2 ? "odd" : "general";
  return padic_report("functional_eq", params, lhs, rhs, dom.N - c);
}

/// Riemann sum at level dom of the integral of q^{(h-1)y} xi^y [x+y]_q^n d mu_{-q}(y).
RamifiedScalar q_moment_riemann_sum(long n, long x, long h, const PadicScalar& q, const RamifiedScalar& xi,
                               const XDomain& dom);

}  // namespace qeuler
