#include "qeuler/zeta.hpp"

#include <cmath>
#include <functional>
#include <vector>

#include "qeuler/errors.hpp"

namespace qeuler {

BigFloat rounding_slack(const SeriesResult& r) {
  return BigFloat::exp2(-r.value.precision() + 20, 64) * (BigFloat(1.0, 64) + abs(r.value));
}

ComplexParams complex_params(long h, const BigFloat& q, const Cyclo& xi, long bits) {
  BigFloat qb(bits);
  mpfr_set(qb.raw(), q.raw(), MPFR_RNDN);
  ComplexParams params(h, BigComplex(qb), embed_complex(xi, bits), root_of_unity_order(xi));
  validate_complex(params);
  return params;
}

void validate_complex(const ComplexParams& params) {
  if (params.h < 1) throw DomainError("complex series need h >= 1 so that |q^h| < 1, got h = " + std::to_string(params.h));
  const BigComplex q = params.q();
  if (!q.is_real()) throw DomainError("complex mode supports real q in (0,1) only (principal-branch brackets)");
  if (q.real().sign() <= 0 || q.real() >= BigFloat(1.0, 53))
    throw DomainError("complex mode needs |q| < 1 with q in (0,1), got q = " + q.real().to_string(10));
}

namespace {

bool integer_exponent(const BigComplex& s, long& n) {
  if (!s.is_real() || !mpfr_integer_p(s.real().raw()) || !mpfr_fits_slong_p(s.real().raw(), MPFR_RNDN)) return false;
  n = mpfr_get_si(s.real().raw(), MPFR_RNDN);
  return true;
}

// y^{-s} for real y > 0.
struct NegPower {
  BigComplex s;
  long n = 0;
  bool integral;
  explicit NegPower(const BigComplex& s_) : s(s_) { integral = integer_exponent(s_, n); }
  BigComplex operator()(const BigFloat& y) const {
    if (integral) {
      if (y.is_zero()) {
        if (n == 0) return BigComplex(1.0, 0.0, y.precision());
        if (n < 0) return BigComplex(y.precision());
        throw DomainError("[0]_q^{-s} with Re s > 0");
      }
      return BigComplex(pow(y, -n));
    }
    if (y.is_zero()) {
      if (s.real().sign() < 0) return BigComplex(y.precision());
      throw DomainError("[0]_q^{-s} with Re s >= 0");
    }
    return exp(-(s * BigComplex(log(y))));
  }
};

/**
 * prefactor * sum_{k >= k0} c(k) (-xi q^h)^k [x+k]_q^{-s}, with |c(k)| <= 1
 * and c periodic of period weights.size() (empty means c = 1).
 * Tail after K_end: |prefactor| B r^{K_end} / (1 - r), r = q^h, where
 * B = max over the tail of [x+k]_q^{-Re s} = max([x+K_end]^{-sigma}, (1-q)^{sigma}).
 */
SeriesResult twisted_series(const BigComplex& prefactor, const std::vector<BigComplex>& weights, long k0,
                            const Rational& x, const BigComplex& s, const ComplexParams& params,
                            const SeriesOptions& opts) {
  validate_complex(params);
  const long bits = std::max<long>(opts.bits, 53);
  const BigFloat one(1.0, bits);
  const BigFloat q = params.q().real();
  const BigFloat r = pow(q, params.h);
  const BigFloat hi = one / (one - q);
  const BigFloat sigma = s.real();
  const BigFloat pref_abs = abs(prefactor);
  const BigFloat qx = params.q_power(x).real();
  auto bracket_at = [&](long k) { return (one - qx * pow(q, k)) / (one - q); };
  auto bound_B = [&](long k_end) {
    const BigFloat lo = bracket_at(k_end);
    const BigFloat neg_sigma = -sigma;
    BigFloat a = pow(lo, neg_sigma);
    BigFloat b = pow(hi, neg_sigma);
    return max(a, b);
  };
  auto tail_at = [&](long k_end) { return pref_abs * bound_B(k_end) * pow(r, k_end) / (one - r); };

  long k_end;
  if (opts.fixed_terms > 0) {
    k_end = k0 + opts.fixed_terms;
  } else {
    // Plan K in double precision, then certify with the exact bound below.
    const double rd = r.to_double();
    const double plan_B = bound_B(std::max<long>(k0, 1)).to_double();
    const double need = std::log(opts.target * (1 - rd) / (std::max(pref_abs.to_double(), 1e-300) * plan_B)) / std::log(rd);
    k_end = std::max<long>(k0 + 1, static_cast<long>(std::ceil(need)) + 1);
    while (k_end > k0 + 1 && tail_at(k_end - 1).to_double() <= opts.target) --k_end;
    while (k_end - k0 < opts.max_terms && tail_at(k_end).to_double() > opts.target) ++k_end;
    if (k_end - k0 > opts.max_terms) k_end = k0 + opts.max_terms;
  }

  const NegPower neg_power(s);
  const BigComplex step = -(params.xi * BigComplex(r));
  BigComplex twist = pow(step, k0);
  BigFloat qk = qx * pow(q, k0);
  BigComplex sum(bits);
  for (long k = k0; k < k_end; ++k) {
    const BigFloat bracket = (one - qk) / (one - q);
    BigComplex term = twist * neg_power(bracket);
    if (!weights.empty()) term = term * weights[static_cast<std::size_t>(k % static_cast<long>(weights.size()))];
    sum += term;
    twist *= step;
    qk *= q;
  }
  SeriesResult out;
  out.value = prefactor * sum;
  out.terms_used = k_end - k0;
  out.tail_bound = tail_at(k_end);
  out.converged = out.tail_bound.to_double() <= opts.target;
  return out;
}

std::vector<BigComplex> character_weights(const DirichletCharacter& chi, long bits) {
  std::vector<BigComplex> w;
  for (unsigned long a = 0; a < chi.modulus(); ++a) w.push_back(embed_complex(chi(static_cast<long>(a)), bits));
  return w;
}

BigComplex neg_one_power(long a, long bits) { return BigComplex(a % 2 ? -1.0 : 1.0, 0.0, bits); }

}  // namespace

SeriesResult zeta_E(const BigComplex& s, const ComplexParams& params, const SeriesOptions& opts) {
  return twisted_series(two_bracket(params.q()), {}, 1, Rational(0), s, params, opts);
}

SeriesResult hurwitz_zeta_E(const BigComplex& s, const Rational& x, const ComplexParams& params,
                            const SeriesOptions& opts) {
  if (x <= 0) throw DomainError("Hurwitz-type zeta needs x > 0 so that [x+k]_q != 0");
  return twisted_series(two_bracket(params.q()), {}, 0, x, s, params, opts);
}

SeriesResult l_function(const BigComplex& s, const DirichletCharacter& chi, const ComplexParams& params,
                        const SeriesOptions& opts) {
  return twisted_series(two_bracket(params.q()), character_weights(chi, opts.bits), 1, Rational(0), s, params, opts);
}

SeriesResult l_function_hurwitz(const BigComplex& s, const DirichletCharacter& chi, const ComplexParams& params,
                                const SeriesOptions& opts) {
  validate_complex(params);
  const long f = static_cast<long>(chi.modulus());
  const ComplexParams scaled = params.scaled(f);
  const BigComplex q = params.q();
  const BigComplex outer = two_bracket(q) / two_bracket(scaled.q()) *
                           exp(-(s * log(q_bracket(f, q))));
  SeriesOptions inner = opts;
  // Each of the f inner sums gets an equal share of the target.
  inner.target = opts.target / static_cast<double>(f) / std::max(1.0, abs(outer).to_double());
  BigComplex sum(opts.bits);
  BigFloat tail(0.0, opts.bits);
  long terms = 0;
  bool converged = true;
  for (long a = 1; a <= f; ++a) {
    const Cyclo c = chi(a);
    if (c.is_zero()) continue;
    const BigComplex coef = embed_complex(c, opts.bits) * neg_one_power(a, opts.bits) * pow(params.xi, a) *
                            params.q_power(Rational(params.h * a));
    SeriesResult h = hurwitz_zeta_E(s, make_rational(a, f), scaled, inner);
    sum += coef * h.value;
    tail += abs(coef) * h.tail_bound;
    terms += h.terms_used;
    converged = converged && h.converged;
  }
  SeriesResult out;
  out.value = outer * sum;
  out.tail_bound = abs(outer) * tail;
  out.terms_used = terms;
  out.converged = converged && out.tail_bound.to_double() <= opts.target;
  return out;
}

SeriesResult partial_zeta_H(const BigComplex& s, long a, long F, const ComplexParams& params,
                            const SeriesOptions& opts) {
  if (F <= 0 || F % 2 == 0) throw DomainError("partial zeta needs an odd F > 0, got " + std::to_string(F));
  if (a <= 0 || a > F) throw DomainError("partial zeta needs 0 < a <= F");
  const ComplexParams scaled = params.scaled(F);
  const BigComplex q = params.q();
  const BigComplex pref = exp(-(s * log(q_bracket(F, q)))) * neg_one_power(a, opts.bits) *
                          params.q_power(Rational(params.h * a)) * pow(params.xi, a) / two_bracket(scaled.q());
  SeriesOptions inner = opts;
  inner.target = opts.target / std::max(1.0, abs(pref).to_double());
  SeriesResult h = hurwitz_zeta_E(s, make_rational(a, F), scaled, inner);
  SeriesResult out;
  out.value = pref * h.value;
  out.tail_bound = abs(pref) * h.tail_bound;
  out.terms_used = h.terms_used;
  out.converged = out.tail_bound.to_double() <= opts.target;
  return out;
}

SeriesResult partial_zeta_H_direct(const BigComplex& s, long a, long F, const ComplexParams& params,
                                   const SeriesOptions& opts) {
  if (F <= 0 || F % 2 == 0) throw DomainError("partial zeta needs an odd F > 0, got " + std::to_string(F));
  if (a <= 0 || a > F) throw DomainError("partial zeta needs 0 < a <= F");
  std::vector<BigComplex> w(static_cast<std::size_t>(F), BigComplex(opts.bits));
  w[static_cast<std::size_t>(a % F)] = BigComplex(1.0, 0.0, opts.bits);
  SeriesOptions o = opts;
  if (o.fixed_terms > 0) o.fixed_terms *= F;
  return twisted_series(BigComplex(1.0, 0.0, opts.bits), w, 1, Rational(0), s, params, o);
}

SeriesResult euler_poly_series(long n, const Rational& x, const ComplexParams& params, long terms) {
  if (x < 0) throw DomainError("Euler series needs x >= 0");
  SeriesOptions o;
  o.bits = params.q().precision();
  o.fixed_terms = terms;
  return twisted_series(two_bracket(params.q()), {}, 0, x, BigComplex(static_cast<double>(-n), 0.0, o.bits), params,
                        o);
}

SeriesResult generalized_euler_series(long n, const DirichletCharacter& chi, const ComplexParams& params,
                                      long terms) {
  SeriesOptions o;
  o.bits = params.q().precision();
  o.fixed_terms = terms;
  return twisted_series(two_bracket(params.q()), character_weights(chi, o.bits), 0, Rational(0),
                        BigComplex(static_cast<double>(-n), 0.0, o.bits), params, o);
}

}  // namespace qeuler
