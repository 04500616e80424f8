#pragma once

#include "qeuler/errors.hpp"
#include "qeuler/rational.hpp"

namespace qeuler {

/// s (s-1) ... (s-j+1) / j!.
/// The numerator is formed first and divided by j! once, so for truncated
/// p-adic scalars the v_p(j!) digits lost in the division show up in the
/// certified precision of the result (or as a PrecisionError).
template <class S>
S gen_binomial(const S& s, long j) {
  if (j < 0) throw DomainError("gen_binomial needs j >= 0");
  S num = one_like(s);
  BigInt fact = 1;
  for (long i = 0; i < j; ++i) {
    num = num * (s - scalar_like(s, Rational(i)));
    fact *= i + 1;
  }
  return num / scalar_like(s, Rational(fact));
}

/// Integer binomial coefficient C(n, k), zero outside 0 <= k <= n.
inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace qeuler
