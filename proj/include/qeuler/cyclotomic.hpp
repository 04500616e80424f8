#pragma once

#include <span>
#include <string>
#include <vector>

#include "qeuler/rational.hpp"

namespace qeuler {

/// Euler's totient.
unsigned long euler_phi(unsigned long m);

/// Integer coefficients (constant term first) of the m-th cyclotomic polynomial.
/// Computed once per m and cached; safe to call from several threads.
const std::vector<BigInt>& cyclotomic_polynomial(unsigned long m);

/**
 * Exact element of the cyclotomic field Q(zeta_m).
 *
 * Stored as the coefficient vector of a polynomial in zeta_m of length
 * phi(m), reduced modulo Phi_m, so two equal elements of the same order have
 * identical vectors. Binary operations on elements of different orders lift
 * both operands into Q(zeta_lcm) first; the result keeps the lcm order.
 * Rational constants have order 1.
 */
class Cyclo {
 public:
  Cyclo() : Cyclo(Rational(0)) {}
  Cyclo(long value) : Cyclo(Rational(value)) {}  // NOLINT: implicit on purpose
  Cyclo(const Rational& value);                 // NOLINT

  /// zeta_m^k; k may be negative.
  static Cyclo zeta(unsigned long m, long k = 1);

  unsigned long order() const noexcept { return order_; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws DomainError unless is_rational().
  Rational rational_value() const;

  /// Same element viewed in Q(zeta_M); M must be a multiple of order().
  /// (Rational operands never force a lift in arithmetic.)
  Cyclo lift(unsigned long M) const;
  /// Same element viewed in Q(zeta_m); throws DomainError if it does not lie there.
  Cyclo project(unsigned long m) const;
  /// Projection onto the smallest Q(zeta_d), d | order(), containing the element.
  Cyclo simplified() const;

  Cyclo inverse() const;

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& rhs);
  Cyclo& operator-=(const Cyclo& rhs);
  Cyclo& operator*=(const Cyclo& rhs);
  Cyclo& operator/=(const Cyclo& rhs);

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
  friend bool operator==(const Cyclo& a, const Cyclo& b);

  /// "num/den" for rationals, otherwise "[c0,c1,...]@m".
  std::string to_string() const;

 private:
  friend Cyclo cyclo_reduce(std::span<const Rational> poly, unsigned long m);
  Cyclo(unsigned long order, std::vector<Rational> coeffs);

  unsigned long order_;
  std::vector<Rational> coeffs_;
};

/// Canonical representative of sum poly[i] zeta_m^i.
Cyclo cyclo_reduce(std::span<const Rational> poly, unsigned long m);

Cyclo pow(const Cyclo& x, long k);

inline Cyclo one_like(const Cyclo&) { return Cyclo(1); }
inline Cyclo scalar_like(const Cyclo&, const Rational& r) { return Cyclo(r); }
inline bool is_zero(const Cyclo& x) { return x.is_zero(); }

/// Multiplicative order of a root of unity; throws DomainError otherwise.
unsigned long root_of_unity_order(const Cyclo& x);

/// Image of an exact value in the ring of `like` (identity here).
inline Cyclo from_cyclo(const Cyclo& x, const Cyclo&) { return x; }
/// Throws DomainError unless x is rational.
inline Rational from_cyclo(const Cyclo& x, const Rational&) { return x.rational_value(); }

/// x^e for an integral exponent e; exact mode has no other roots.
Cyclo rational_power(const Cyclo& x, const Rational& e);

}  // namespace qeuler
