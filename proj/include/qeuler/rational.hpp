#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qeuler {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Canonical num/den; throws DomainError when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "a", "-a", "a/b". Decimal points are not accepted here.
Rational parse_rational(std::string_view text);

/// "num/den", or "num" for integers.
std::string to_string(const Rational& x);

/// v_p(x) for x != 0.
long valuation(const BigInt& x, unsigned long p);
long valuation(const Rational& x, unsigned long p);

/// v_p(j!) by Legendre's formula.
long factorial_valuation(long j, unsigned long p);

bool is_odd_prime(long p);

BigInt ipow(const BigInt& base, unsigned long e);

// Ring hooks shared with the other scalar types (see qkit.hpp).
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational scalar_like(const Rational&, const Rational& r) { return r; }
inline bool is_zero(const Rational& x) { return x == 0; }
Rational pow(const Rational& x, long k);
/// Integral exponents only.
Rational rational_power(const Rational& x, const Rational& e);

}  // namespace qeuler
