#include "qeuler/rational.hpp"

#include <cctype>

#include "qeuler/errors.hpp"

namespace qeuler {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

BigInt parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw DomainError("malformed integer literal '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw DomainError("malformed integer literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return make_rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string to_string(const Rational& x) { return x.get_str(); }

long valuation(const BigInt& x, unsigned long p) {
  if (x == 0) throw DomainError("valuation of zero");
  BigInt y = abs(x);
  long v = 0;
  while (mpz_divisible_ui_p(y.get_mpz_t(), p)) {
    mpz_divexact_ui(y.get_mpz_t(), y.get_mpz_t(), p);
    ++v;
  }
  return v;
}

long valuation(const Rational& x, unsigned long p) {
  if (x == 0) throw DomainError("valuation of zero");
  return valuation(BigInt(x.get_num()), p) - valuation(BigInt(x.get_den()), p);
}

long factorial_valuation(long j, unsigned long p) {
  long v = 0;
  for (long pk = static_cast<long>(p); pk <= j; pk *= static_cast<long>(p)) v += j / pk;
  return v;
}

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational pow(const Rational& x, long k) {
  if (k < 0) {
    if (x == 0) throw DomainError("negative power of zero");
    return pow(Rational(1 / x), -k);
  }
  Rational r(ipow(BigInt(x.get_num()), static_cast<unsigned long>(k)),
             ipow(BigInt(x.get_den()), static_cast<unsigned long>(k)));
  return r;
}

Rational rational_power(const Rational& x, const Rational& e) {
  if (e.get_den() != 1 || !e.get_num().fits_slong_p())
    throw DomainError("exact mode has no root extraction: q^" + to_string(e) +
                      " (re-parameterize q as Q^F so every needed exponent is integral)");
  return pow(x, e.get_num().get_si());
}

}  // namespace qeuler
