#pragma once

#include <numeric>
#include <string>

#include "qeuler/errors.hpp"
#include "qeuler/rational.hpp"

namespace qeuler {

// Every scalar type S used by the generic code provides, by ADL:
//   S one_like(const S&);                      1 in the ring of the argument
//   S scalar_like(const S&, const Rational&);  image of a rational
//   bool is_zero(const S&);
//   S pow(const S&, long);
//   S rational_power(const S&, const Rational&);

/// 1 + q + ... + q^{x-1} for x >= 0; -q^x [-x]_q for x < 0.
/// Uses [2m]_q = [m]_q (1 + q^m) so no division is needed and q = 1 gives x.
template <class S>
S q_bracket(long x, const S& q) {
  if (x < 0) return -(pow(q, x) * q_bracket(-x, q));
  S sum = scalar_like(q, 0);  // [k]_q
  S qk = one_like(q);         // q^k
  int top = 62;
  while (top >= 0 && !((x >> top) & 1)) --top;
  for (int bit = top; bit >= 0; --bit) {
    // (sum, qk) for k -> 2k
    sum = sum * (one_like(q) + qk);
    qk = qk * qk;
    if ((x >> bit) & 1) {
      sum = sum * q + one_like(q);
      qk = qk * q;
    }
  }
  return sum;
}

/// (1 - (-q)^x) / (1 + q) = 1 - q + q^2 - ... + (-q)^{x-1}, x >= 0.
template <class S>
S neg_q_bracket(long x, const S& q) {
  if (is_zero(one_like(q) + q)) throw DomainError("[x]_{-q} needs 1 + q invertible, got q = -1");
  if (x < 0) throw DomainError("[x]_{-q} is provided for x >= 0 only");
  return q_bracket(x, S(-q));
}

/// [2]_q = 1 + q.
template <class S>
S two_bracket(const S& q) {
  return one_like(q) + q;
}

enum class Mode { exact, complex, padic };

inline std::string to_string(Mode m) {
  switch (m) {
    case Mode::exact: return "exact";
    case Mode::complex: return "complex";
    case Mode::padic: return "padic";
  }
  return "?";
}

/**
 * The triple (h, q, xi).
 *
 * q is carried as q = Q^R for a base scalar Q and a root degree R, so that
 * q^{a/F} = Q^{aR/F} is an integral power whenever F | aR. Use scaled(d) to
 * pass to (q^d, xi^d) without leaving this representation.
 */
template <class S>
struct QEulerParams {
  long h = 1;
  S q_base;
  long root_degree = 1;
  S xi;
  unsigned long xi_order = 1;

  QEulerParams(long h_, S q_, S xi_, unsigned long xi_order_ = 1, long root_degree_ = 1)
      : h(h_), q_base(std::move(q_)), root_degree(root_degree_), xi(std::move(xi_)), xi_order(xi_order_) {}

  S q() const { return pow(q_base, root_degree); }

  /// q^e for rational e. Throws DomainError in exact mode when e R is not integral.
  S q_power(const Rational& e) const {
    Rational total = e * Rational(root_degree);
    if (total.get_den() == 1 && total.get_num().fits_slong_p()) return pow(q_base, total.get_num().get_si());
    return rational_power(q_base, total);
  }

  /// (h, q^d, xi^d).
  QEulerParams scaled(long d) const {
    if (d <= 0) throw DomainError("scaling exponent must be positive");
    const unsigned long order = xi_order / std::gcd(xi_order, static_cast<unsigned long>(d));
    return QEulerParams(h, q_base, pow(xi, d), order, root_degree * d);
  }
};

/// Checks xi^order = 1; throws DomainError otherwise.
template <class S>
void validate_xi(const QEulerParams<S>& params) {
  if (params.xi_order == 0) throw DomainError("xi must have positive order");
  if (!(pow(params.xi, static_cast<long>(params.xi_order)) == one_like(params.xi)))
    throw DomainError("xi does not satisfy xi^" + std::to_string(params.xi_order) + " = 1");
}

}  // namespace qeuler
