#pragma once

#include "qeuler/bigfloat.hpp"
#include "qeuler/characters.hpp"
#include "qeuler/qkit.hpp"

namespace qeuler {

using ComplexParams = QEulerParams<BigComplex>;

struct SeriesOptions {
  long bits = kDefaultBits;
  double target = 1e-12;
  long max_terms = 1000000;
  /// When positive, sum exactly this many terms instead of choosing K from target.
  long fixed_terms = 0;
};

/// Truncated series. tail_bound bounds |value - limit| up to MPFR rounding,
/// which rounding_slack() accounts for.
struct SeriesResult {
  BigComplex value;
  long terms_used = 0;
  BigFloat tail_bound;
  bool converged = false;
};

/// Allowance for accumulated rounding: 2^{-bits+20} (1 + |value|).
BigFloat rounding_slack(const SeriesResult& r);

/// Complex-mode parameters with real q in (0, 1), q = q_base^root_degree.
ComplexParams complex_params(long h, const BigFloat& q, const Cyclo& xi, long bits = kDefaultBits);
/// Throws DomainError unless q is real in (0,1) and h >= 1.
void validate_complex(const ComplexParams& params);

/// zeta_E(s) = [2]_q sum_{k>=1} (-1)^k xi^k q^{hk} / [k]_q^s.
SeriesResult zeta_E(const BigComplex& s, const ComplexParams& params, const SeriesOptions& opts = {});

/// zeta_E(s, x) = [2]_q sum_{k>=0} (-1)^k xi^k q^{hk} / [x+k]_q^s, x > 0.
SeriesResult hurwitz_zeta_E(const BigComplex& s, const Rational& x, const ComplexParams& params,
                            const SeriesOptions& opts = {});

/// l(s, chi) = [2]_q sum_{k>=1} chi(k) (-1)^k q^{hk} xi^k / [k]_q^s.
SeriesResult l_function(const BigComplex& s, const DirichletCharacter& chi, const ComplexParams& params,
                        const SeriesOptions& opts = {});

/// The same l-value through Hurwitz functions at q^f, f the modulus of chi:
/// [f]_q^{-s} ([2]_q/[2]_{q^f}) sum_{a=1}^{f} chi(a)(-1)^a xi^a q^{ha} zeta_{E,xi^f,q^f}(s, a/f).
SeriesResult l_function_hurwitz(const BigComplex& s, const DirichletCharacter& chi, const ComplexParams& params,
                                const SeriesOptions& opts = {});

/// H(s, a | F) = sum_{m = a mod F, m > 0} (-1)^m q^{hm} xi^m / [m]_q^s via the closed form
/// [F]_q^{-s} ((-1)^a q^{ha} xi^a / [2]_{q^F}) zeta_{E,xi^F,q^F}(s, a/F), 0 < a <= F, F odd.
SeriesResult partial_zeta_H(const BigComplex& s, long a, long F, const ComplexParams& params,
                            const SeriesOptions& opts = {});

/// H(s, a | F) by summing the congruence class directly.
SeriesResult partial_zeta_H_direct(const BigComplex& s, long a, long F, const ComplexParams& params,
                                   const SeriesOptions& opts = {});

/// [2]_q sum_{k<K} (-1)^k xi^k q^{hk} [x+k]_q^n, x >= 0, with tail bound; K = terms.
SeriesResult euler_poly_series(long n, const Rational& x, const ComplexParams& params, long terms);

/// [2]_q sum_{k<K} chi(k) (-1)^k xi^k q^{hk} [k]_q^n.
SeriesResult generalized_euler_series(long n, const DirichletCharacter& chi, const ComplexParams& params, long terms);

}  // namespace qeuler
