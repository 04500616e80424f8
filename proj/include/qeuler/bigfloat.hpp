#pragma once

#include <mpfr.h>

#include <string>

#include "qeuler/cyclotomic.hpp"
#include "qeuler/rational.hpp"

namespace qeuler {

inline constexpr long kDefaultBits = 128;

/// MPFR real with a per-value precision in bits. Binary operations run at the
/// larger of the two operand precisions, rounding to nearest.
class BigFloat {
 public:
  explicit BigFloat(long bits = kDefaultBits);
  BigFloat(double value, long bits);
  BigFloat(const Rational& value, long bits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  /// Scientific notation with `digits` significant decimal digits.
  std::string to_string(int digits = 20) const;

  static BigFloat pi(long bits);
  /// 2^e at the given precision.
  static BigFloat exp2(long e, long bits);

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);
  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat pow(const BigFloat& x, long k);
BigFloat pow(const BigFloat& x, const BigFloat& y);
BigFloat max(const BigFloat& a, const BigFloat& b);

/// Complex number over BigFloat.
class BigComplex {
 public:
  explicit BigComplex(long bits = kDefaultBits) : re_(bits), im_(bits) {}
  BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit BigComplex(const BigFloat& re) : re_(re), im_(re.precision()) {}
  BigComplex(double re, double im, long bits) : re_(re, bits), im_(im, bits) {}

  const BigFloat& real() const { return re_; }
  const BigFloat& imag() const { return im_; }
  long precision() const { return re_.precision() > im_.precision() ? re_.precision() : im_.precision(); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  BigComplex conj() const { return BigComplex(re_, -im_); }
  /// "re+imi" at `digits` significant digits per part.
  std::string to_string(int digits = 20) const;

  BigComplex operator-() const { return BigComplex(-re_, -im_); }
  BigComplex& operator+=(const BigComplex& rhs);
  BigComplex& operator-=(const BigComplex& rhs);
  BigComplex& operator*=(const BigComplex& rhs);
  BigComplex& operator/=(const BigComplex& rhs);
  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  BigFloat re_;
  BigFloat im_;
};

BigFloat abs(const BigComplex& z);
BigComplex exp(const BigComplex& z);
/// Principal branch.
BigComplex log(const BigComplex& z);
BigComplex pow(const BigComplex& z, long k);
/// exp(w * log z), principal branch.
BigComplex pow(const BigComplex& z, const BigComplex& w);

inline BigComplex one_like(const BigComplex& z) { return BigComplex(1.0, 0.0, z.precision()); }
inline BigComplex scalar_like(const BigComplex& z, const Rational& r) {
  return BigComplex(BigFloat(r, z.precision()));
}
inline bool is_zero(const BigComplex& z) { return z.is_zero(); }
/// z^e = exp(e log z) on the principal branch.
BigComplex rational_power(const BigComplex& z, const Rational& e);

/// Image of x under zeta_m -> exp(2 pi i / m). Each coefficient product and
/// sum rounds once, so the absolute error is at most
/// (2 phi(m) + 4) * 2^{-bits} * sum_i |c_i|.
BigComplex embed_complex(const Cyclo& x, long bits);

inline BigComplex from_cyclo(const Cyclo& x, const BigComplex& like) {
  return embed_complex(x, like.precision() < 53 ? 53 : like.precision());
}

}  // namespace qeuler
