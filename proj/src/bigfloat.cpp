#include "qeuler/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "qeuler/errors.hpp"

namespace qeuler {

namespace {

long checked_bits(long bits) {
  if (bits < MPFR_PREC_MIN || bits > 1 << 20) throw DomainError("unsupported precision " + std::to_string(bits));
  return bits;
}

}  // namespace

BigFloat::BigFloat(long bits) {
  mpfr_init2(v_, checked_bits(bits));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double value, long bits) {
  mpfr_init2(v_, checked_bits(bits));
  mpfr_set_d(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, long bits) {
  mpfr_init2(v_, checked_bits(bits));
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

std::string BigFloat::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

BigFloat BigFloat::pi(long bits) {
  BigFloat r(bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::exp2(long e, long bits) {
  BigFloat r(bits);
  mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

namespace {

// Promote `self` to the precision of `rhs` if that is larger.
void widen(mpfr_ptr self, mpfr_srcptr rhs) {
  if (mpfr_get_prec(rhs) > mpfr_get_prec(self)) mpfr_prec_round(self, mpfr_get_prec(rhs), MPFR_RNDN);
}

}  // namespace

BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  widen(v_, rhs.v_);
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  widen(v_, rhs.v_);
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  widen(v_, rhs.v_);
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  widen(v_, rhs.v_);
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x);
  mpfr_abs(r.raw(), r.raw(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x);
  mpfr_sqrt(r.raw(), r.raw(), MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& x) {
  BigFloat r(x);
  mpfr_exp(r.raw(), r.raw(), MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& x) {
  BigFloat r(x);
  mpfr_log(r.raw(), r.raw(), MPFR_RNDN);
  return r;
}

BigFloat sin(const BigFloat& x) {
  BigFloat r(x);
  mpfr_sin(r.raw(), r.raw(), MPFR_RNDN);
  return r;
}

BigFloat cos(const BigFloat& x) {
  BigFloat r(x);
  mpfr_cos(r.raw(), r.raw(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& x, long k) {
  BigFloat r(x);
  mpfr_pow_si(r.raw(), r.raw(), k, MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& x, const BigFloat& y) {
  BigFloat r(x);
  widen(r.raw(), y.raw());
  mpfr_pow(r.raw(), r.raw(), y.raw(), MPFR_RNDN);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

std::string BigComplex::to_string(int digits) const {
  std::string re = re_.to_string(digits);
  std::string im = im_.to_string(digits);
  if (!im.empty() && im[0] != '-') im = "+" + im;
  return re + im + "i";
}

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
  BigFloat re = re_ * rhs.re_ - im_ * rhs.im_;
  BigFloat im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& rhs) {
  if (rhs.is_zero()) throw DomainError("complex division by zero");
  BigFloat den = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
  BigFloat re = (re_ * rhs.re_ + im_ * rhs.im_) / den;
  BigFloat im = (im_ * rhs.re_ - re_ * rhs.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigFloat abs(const BigComplex& z) {
  BigFloat r(z.precision());
  mpfr_hypot(r.raw(), z.real().raw(), z.imag().raw(), MPFR_RNDN);
  return r;
}

BigComplex exp(const BigComplex& z) {
  BigFloat m = exp(z.real());
  return BigComplex(m * cos(z.imag()), m * sin(z.imag()));
}

BigComplex log(const BigComplex& z) {
  if (z.is_zero()) throw DomainError("log of zero");
  BigFloat arg(z.precision());
  mpfr_atan2(arg.raw(), z.imag().raw(), z.real().raw(), MPFR_RNDN);
  return BigComplex(log(abs(z)), arg);
}

BigComplex pow(const BigComplex& z, long k) {
  if (k < 0) return one_like(z) / pow(z, -k);
  BigComplex result = one_like(z);
  BigComplex base = z;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

BigComplex pow(const BigComplex& z, const BigComplex& w) {
  if (z.is_zero()) {
    if (w.is_zero()) return one_like(z);
    if (w.real().sign() > 0) return BigComplex(z.precision());
    throw DomainError("0 raised to a power with non-positive real part");
  }
  return exp(w * log(z));
}

BigComplex rational_power(const BigComplex& z, const Rational& e) {
  if (e.get_den() == 1 && e.get_num().fits_slong_p()) return pow(z, e.get_num().get_si());
  return pow(z, scalar_like(z, e));
}

BigComplex embed_complex(const Cyclo& x, long bits) {
  if (bits < 53) throw DomainError("embed_complex needs at least 53 bits");
  // A few guard bits so the result is accurate at `bits`.
  const long work = bits + 16;
  const unsigned long m = x.order();
  const auto& c = x.coefficients();
  BigFloat re(work), im(work);
  const BigFloat two_pi_over_m = BigFloat::pi(work) * BigFloat(2.0, work) / BigFloat(Rational(static_cast<long>(m)), work);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    BigFloat coeff(c[i], work);
    if (i == 0) {
      re += coeff;
      continue;
    }
    BigFloat angle = two_pi_over_m * BigFloat(Rational(static_cast<long>(i)), work);
    re += coeff * cos(angle);
    im += coeff * sin(angle);
  }
  BigFloat r(bits), s(bits);
  mpfr_set(r.raw(), re.raw(), MPFR_RNDN);
  mpfr_set(s.raw(), im.raw(), MPFR_RNDN);
  return BigComplex(r, s);
}

}  // namespace qeuler
