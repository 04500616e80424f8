#pragma once

#include <vector>

#include "qeuler/binomial.hpp"
#include "qeuler/characters.hpp"
#include "qeuler/cyclotomic.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/qkit.hpp"

namespace qeuler {

/**
 * E_{n,xi,q}^{(h,1)}(x) as a function of x, via the finite sum
 *   [2]_q / (1-q)^n * sum_j C(n,j) (-1)^j q^{xj} / (1 + xi q^{h+j}).
 * The weights C(n,j)(-1)^j / (1 + xi q^{h+j}) do not depend on x and are
 * formed once.
 */
template <class S>
class EulerKernel {
 public:
  EulerKernel(long n, const QEulerParams<S>& params) : n_(n), params_(params), prefactor_(two_bracket(params.q())) {
    if (n < 0) throw DomainError("Euler polynomial degree must be >= 0");
    const S q = params.q();
    const S one = one_like(q);
    if (n > 0) {
      const S one_minus_q = one - q;
      if (is_zero(one_minus_q)) throw DomainError("the finite Euler sum needs q != 1 (1 - q is inverted)");
      prefactor_ = prefactor_ / pow(one_minus_q, n);
    }
    weights_.reserve(static_cast<std::size_t>(n + 1));
    S qhj = params.q_power(Rational(params.h));
    for (long j = 0; j <= n; ++j) {
      S den = one + params.xi * qhj;
      if (is_zero(den)) throw DegenerateDenominator(j);
      S c = scalar_like(q, Rational(binomial(n, j) * (j % 2 ? -1 : 1)));
      weights_.push_back(c / den);
      qhj = qhj * q;
    }
  }

  long degree() const noexcept { return n_; }
  const QEulerParams<S>& params() const noexcept { return params_; }

  S operator()(const Rational& x) const {
    const S qx = params_.q_power(x);
    S acc = weights_[0];
    S power = one_like(qx);
    for (std::size_t j = 1; j < weights_.size(); ++j) {
      power = power * qx;
      acc = acc + weights_[j] * power;
    }
    return prefactor_ * acc;
  }

 private:
  long n_;
  QEulerParams<S> params_;
  S prefactor_;
  std::vector<S> weights_;
};

/// E_{n,xi,q}^{(h,1)}(x).
template <class S>
S euler_poly(long n, const Rational& x, const QEulerParams<S>& params) {
  return EulerKernel<S>(n, params)(x);
}

/// E_{n,xi,q}^{(h,1)} = E_{n,xi,q}^{(h,1)}(0).
template <class S>
S euler_number(long n, const QEulerParams<S>& params) {
  return euler_poly(n, Rational(0), params);
}

/// ([2]_q/[2]_{q^d}) [d]_q^n sum_{a<d} (-1)^a xi^a q^{ha} E_{n,xi^d,q^d}((x+a)/d), d odd.
template <class S>
S distribution_rhs(long n, const Rational& x, long d, const QEulerParams<S>& params) {
  if (d <= 0 || d % 2 == 0) throw DomainError("distribution relation needs an odd d > 0, got " + std::to_string(d));
  const S q = params.q();
  const QEulerParams<S> scaled = params.scaled(d);
  const EulerKernel<S> kernel(n, scaled);
  S sum = scalar_like(q, 0);
  S twist = one_like(q);  // (-1)^a xi^a q^{ha}
  const S step = -(params.xi * params.q_power(Rational(params.h)));
  for (long a = 0; a < d; ++a) {
    sum = sum + twist * kernel((x + a) / Rational(d));
    twist = twist * step;
  }
  return two_bracket(q) / two_bracket(scaled.q()) * pow(q_bracket(d, q), n) * sum;
}

/// E_{n,xi,chi,q}^{(h,1)} by the finite sum over a mod F,
///   [F]_q^n ([2]_q/[2]_{q^F}) sum_{a<F} chi(a)(-1)^a xi^a q^{ha} E_{n,xi^F,q^F}(a/F).
/// F defaults to the modulus of chi and must be an odd multiple of it.
template <class S>
S generalized_euler(long n, const DirichletCharacter& chi, const QEulerParams<S>& params, long F = 0) {
  if (F == 0) F = static_cast<long>(chi.modulus());
  if (F <= 0 || F % 2 == 0 || F % static_cast<long>(chi.modulus()) != 0)
    throw DomainError("generalized Euler numbers need an odd multiple of the character modulus, got " +
                      std::to_string(F));
  const S q = params.q();
  const QEulerParams<S> scaled = params.scaled(F);
  const EulerKernel<S> kernel(n, scaled);
  S sum = scalar_like(q, 0);
  S twist = one_like(q);
  const S step = -(params.xi * params.q_power(Rational(params.h)));
  for (long a = 0; a < F; ++a) {
    const Cyclo c = chi(a);
    if (!c.is_zero()) sum = sum + from_cyclo(c, q) * twist * kernel(make_rational(a, F));
    twist = twist * step;
  }
  return pow(q_bracket(F, q), n) * two_bracket(q) / two_bracket(scaled.q()) * sum;
}

/// Negative-integer value of the partial zeta function,
///   ([F]_q^n/[2]_{q^F}) (-1)^a q^{ha} xi^a E_{n,xi^F,q^F}(a/F).
template <class S>
S partial_zeta_exact(long n, long a, long F, const QEulerParams<S>& params) {
  if (F <= 0 || F % 2 == 0) throw DomainError("partial zeta needs an odd F > 0");
  if (a <= 0 || a > F) throw DomainError("partial zeta needs 0 < a <= F");
  const S q = params.q();
  const QEulerParams<S> scaled = params.scaled(F);
  S sign = scalar_like(q, a % 2 ? -1 : 1);
  return pow(q_bracket(F, q), n) / two_bracket(scaled.q()) * sign * params.q_power(Rational(params.h * a)) *
         pow(params.xi, a) * euler_poly(n, make_rational(a, F), scaled);
}

/// E_{0..N,xi}: 2/(xi e^t + 1) = sum E_{n,xi} t^n/n!, by the recurrence
/// (1+xi) E_n = -xi sum_{k<n} C(n,k) E_k. Needs xi != -1.
std::vector<Cyclo> twisted_euler_numbers(long N, const Cyclo& xi);

/// E_{0..N,chi,xi}: 2 sum_{a<d} chi(a)(-1)^a xi^a e^{at} / (xi^d e^{dt} + 1), d = modulus of chi.
std::vector<Cyclo> generalized_twisted_euler_numbers(long N, const DirichletCharacter& chi, const Cyclo& xi);

}  // namespace qeuler
