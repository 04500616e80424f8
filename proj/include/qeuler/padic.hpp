#pragma once

#include <string>
#include <vector>

#include "qeuler/cyclotomic.hpp"
#include "qeuler/rational.hpp"

namespace qeuler {

/**
 * Element of Z_p known modulo p^precision.
 *
 * `cap` is the working precision of the computation the scalar belongs to;
 * `precision` <= cap is what is actually certified. Arithmetic propagates
 * absolute precision:
 *   a +- b : min(A, B)
 *   a * b  : min(A + v(b), B + v(a), cap)
 *   a / b  : min(A - v(b), B - 2 v(b) + v(a), cap)   (requires v(a) >= v(b))
 * so every division by a non-unit shows up as lost digits.
 */
class PadicScalar {
 public:
  PadicScalar(unsigned long p, long cap, const BigInt& value = 0);
  PadicScalar(unsigned long p, long cap, const BigInt& value, long precision);

  /// Throws DomainError if v_p(r) < 0.
  static PadicScalar from_rational(unsigned long p, long cap, const Rational& r);

  unsigned long prime() const noexcept { return p_; }
  long cap() const noexcept { return cap_; }
  long precision() const noexcept { return prec_; }
  /// Representative in [0, p^precision).
  const BigInt& residue() const noexcept { return value_; }
  /// Signed representative in (-p^precision / 2, p^precision / 2].
  BigInt centered() const;

  /// v_p of the residue, or precision() when the residue is zero.
  long valuation() const;
  bool is_unit() const { return valuation() == 0 && prec_ > 0; }
  bool is_zero() const { return value_ == 0; }

  PadicScalar with_precision(long precision) const;
  /// Same residue and certified precision (clipped to the new cap) under another working cap.
  PadicScalar with_cap(long cap) const;
  PadicScalar inverse() const;

  PadicScalar operator-() const;
  PadicScalar& operator+=(const PadicScalar& rhs);
  PadicScalar& operator-=(const PadicScalar& rhs);
  PadicScalar& operator*=(const PadicScalar& rhs);
  PadicScalar& operator/=(const PadicScalar& rhs);
  friend PadicScalar operator+(PadicScalar a, const PadicScalar& b) { return a += b; }
  friend PadicScalar operator-(PadicScalar a, const PadicScalar& b) { return a -= b; }
  friend PadicScalar operator*(PadicScalar a, const PadicScalar& b) { return a *= b; }
  friend PadicScalar operator/(PadicScalar a, const PadicScalar& b) { return a /= b; }
  /// Equality modulo the smaller of the two precisions.
  friend bool operator==(const PadicScalar& a, const PadicScalar& b);

  /// "<residue> mod <p>^<precision>"
  std::string to_string() const;

 private:
  void normalize();

  unsigned long p_;
  long cap_;
  long prec_;
  BigInt modulus_;
  BigInt value_;
};

PadicScalar pow(const PadicScalar& x, long k);
inline PadicScalar one_like(const PadicScalar& x) { return PadicScalar(x.prime(), x.cap(), 1); }
inline PadicScalar scalar_like(const PadicScalar& x, const Rational& r) {
  return PadicScalar::from_rational(x.prime(), x.cap(), r);
}
inline bool is_zero(const PadicScalar& x) { return x.is_zero(); }
/// Integral exponents only; use one_unit_power for exponents in Z_p.
PadicScalar rational_power(const PadicScalar& x, const Rational& e);

/// v_p(a - b), limited by the precision of both operands.
long distance_valuation(const PadicScalar& a, const PadicScalar& b);

/**
 * Element of Z_p[pi] = Z_p[xi_p], pi = xi_p - 1, xi_p a fixed primitive p-th
 * root of unity. Stored as coefficients c_0..c_{p-2} of a polynomial in pi
 * reduced by the Eisenstein relation Phi_p(1 + pi) = 0, known modulo
 * p^precision. Valuations are measured in units of 1/(p-1), so v(pi) = 1.
 */
class RamifiedScalar {
 public:
  explicit RamifiedScalar(const PadicScalar& base);
  RamifiedScalar(unsigned long p, long cap, std::vector<BigInt> coeffs, long precision);

  static RamifiedScalar pi(unsigned long p, long cap);
  /// xi_p^k = (1 + pi)^k.
  static RamifiedScalar xi_power(unsigned long p, long cap, long k);

  unsigned long prime() const noexcept { return p_; }
  long cap() const noexcept { return cap_; }
  long precision() const noexcept { return prec_; }
  long degree() const noexcept { return static_cast<long>(p_) - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return c_; }

  /// min_i ((p-1) v_p(c_i) + i), or (p-1) * precision for zero.
  long valuation_units() const;
  /// Valuation normalized so that v(p) = 1.
  Rational valuation() const;
  bool is_unit() const;
  bool in_base_ring() const;
  /// Throws DomainError unless in_base_ring().
  PadicScalar base_part() const;
  /// Image in Z_p[pi]/(pi) = F_p.
  unsigned long reduce_mod_pi() const;

  RamifiedScalar with_precision(long precision) const;
  RamifiedScalar with_cap(long cap) const;
  RamifiedScalar inverse() const;

  RamifiedScalar operator-() const;
  RamifiedScalar& operator+=(const RamifiedScalar& rhs);
  RamifiedScalar& operator-=(const RamifiedScalar& rhs);
  RamifiedScalar& operator*=(const RamifiedScalar& rhs);
  RamifiedScalar& operator*=(const PadicScalar& rhs);
  RamifiedScalar& operator/=(const RamifiedScalar& rhs);
  friend RamifiedScalar operator+(RamifiedScalar a, const RamifiedScalar& b) { return a += b; }
  friend RamifiedScalar operator-(RamifiedScalar a, const RamifiedScalar& b) { return a -= b; }
  friend RamifiedScalar operator*(RamifiedScalar a, const RamifiedScalar& b) { return a *= b; }
  friend RamifiedScalar operator*(RamifiedScalar a, const PadicScalar& b) { return a *= b; }
  friend RamifiedScalar operator/(RamifiedScalar a, const RamifiedScalar& b) { return a /= b; }
  friend bool operator==(const RamifiedScalar& a, const RamifiedScalar& b);

  /// Base-ring elements print as PadicScalar; others as
  /// "[c0,...,c_{p-2}] mod <p>^<precision> (pi-basis)".
  std::string to_string() const;

 private:
  /// Exact division of every coefficient by p^j; costs j digits.
  RamifiedScalar divided_by_p_power(long j) const;
  void normalize();

  unsigned long p_;
  long cap_;
  long prec_;
  BigInt modulus_;
  std::vector<BigInt> c_;
};

RamifiedScalar pow(const RamifiedScalar& x, long k);
inline RamifiedScalar one_like(const RamifiedScalar& x) {
  return RamifiedScalar(PadicScalar(x.prime(), x.cap(), 1));
}
inline RamifiedScalar scalar_like(const RamifiedScalar& x, const Rational& r) {
  return RamifiedScalar(PadicScalar::from_rational(x.prime(), x.cap(), r));
}
inline bool is_zero(const RamifiedScalar& x) { return x.valuation_units() >= x.degree() * x.precision(); }
RamifiedScalar rational_power(const RamifiedScalar& x, const Rational& e);

/// v(a - b) in units of 1/(p-1), limited by precision.
long distance_valuation_units(const RamifiedScalar& a, const RamifiedScalar& b);

/// v_p(a - b) normalized so that v(p) = 1, for either scalar type.
inline Rational padic_distance(const PadicScalar& a, const PadicScalar& b) { return Rational(distance_valuation(a, b)); }
inline Rational padic_distance(const RamifiedScalar& a, const RamifiedScalar& b) {
  return make_rational(distance_valuation_units(a, b), a.degree());
}

unsigned long smallest_primitive_root(unsigned long p);

/// omega(a): the (p-1)-th root of unity congruent to a mod p, to precision N.
PadicScalar teichmuller(long a, unsigned long p, long N);

/**
 * Embedding of cyclotomic fields Q(zeta_M), M | p(p-1), into Q_p(xi_p).
 * zeta_p goes to 1 + pi and zeta_{p-1} goes to omega(g) for the smallest
 * primitive root g, matching the exact realization of the Teichmueller
 * character in characters.hpp.
 */
class PadicEmbedding {
 public:
  PadicEmbedding(unsigned long p, long cap);

  unsigned long prime() const noexcept { return p_; }
  long cap() const noexcept { return cap_; }
  unsigned long primitive_root() const noexcept { return g_; }
  bool embeds(unsigned long m) const;

  RamifiedScalar image_of_zeta(unsigned long m) const;
  /// Throws DomainError if the order does not embed or a coefficient is
  /// not p-integral.
  RamifiedScalar operator()(const Cyclo& x) const;
  PadicScalar operator()(const Rational& x) const;

 private:
  unsigned long p_;
  long cap_;
  unsigned long g_;
  PadicScalar omega_g_;
};

}  // namespace qeuler
