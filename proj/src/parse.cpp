#include "qeuler/parse.hpp"

#include <numeric>
#include <regex>

#include "qeuler/errors.hpp"

namespace qeuler {

std::string XiSpec::to_string() const {
  if (order == 1) return "1";
  if (order == 2) return "-1";
  return "zeta:" + std::to_string(order) + (exponent == 1 ? "" : "^" + std::to_string(exponent));
}

XiSpec parse_xi(const std::string& text) {
  if (text == "1") return XiSpec{};
  if (text == "-1") return XiSpec{2, 1};
  static const std::regex zeta(R"(zeta:(\d+)(?:\^(-?\d+))?)");
  std::smatch m;
  if (!std::regex_match(text, m, zeta))
    throw DomainError("unrecognized xi '" + text + "' (expected 1, -1, zeta:<m> or zeta:<m>^<k>)");
  const unsigned long order = std::stoul(m[1]);
  if (order == 0) throw DomainError("xi must have positive order");
  long k = m[2].matched ? std::stol(m[2]) : 1;
  k %= static_cast<long>(order);
  if (k < 0) k += static_cast<long>(order);
  const unsigned long g = std::gcd(order, static_cast<unsigned long>(k));
  const unsigned long exact = order / g;
  if (exact == 1) return XiSpec{};
  return XiSpec{exact, k / static_cast<long>(g)};
}

XiSpec xi_of_order(unsigned long m) {
  if (m == 0) throw DomainError("xi must have positive order");
  return m == 1 ? XiSpec{} : XiSpec{m, 1};
}

Rational parse_exact(const std::string& text) {
  static const std::regex decimal(R"(([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?)");
  std::smatch m;
  if (text.find('/') != std::string::npos) return parse_rational(text);
  if (!std::regex_match(text, m, decimal) || (m[2].length() == 0 && m[3].length() == 0))
    throw DomainError("cannot read '" + text + "' as an exact number");
  const std::string digits = m[2].str() + m[3].str();
  long exponent = m[4].matched ? std::stol(m[4]) : 0;
  exponent -= static_cast<long>(m[3].length());
  BigInt num(digits.empty() ? "0" : digits);
  if (m[1] == "-") num = -num;
  if (exponent >= 0) return Rational(num * ipow(BigInt(10), static_cast<unsigned long>(exponent)));
  return make_rational(num, ipow(BigInt(10), static_cast<unsigned long>(-exponent)));
}

Rational parse_padic_q(const std::string& text, unsigned long p) {
  static const std::regex shorthand(R"(1([+-])(\d*)p(?:\^(\d+))?)");
  std::smatch m;
  if (!std::regex_match(text, m, shorthand)) return parse_exact(text);
  const BigInt k(m[2].length() ? m[2].str() : "1");
  const unsigned long e = m[3].matched ? std::stoul(m[3]) : 1;
  const BigInt step = k * ipow(BigInt(p), e);
  return Rational(m[1] == "+" ? BigInt(1 + step) : BigInt(1 - step));
}

BigComplex parse_complex(const std::string& text, long bits) {
  static const std::regex pure_imag(R"(([+-]?[0-9./eE]*)i)");
  static const std::regex full(R"(([+-]?[0-9./eE]+?)([+-][0-9./eE]*)i)");
  std::smatch m;
  auto part = [&](const std::string& s) {
    if (s.empty() || s == "+") return Rational(1);
    if (s == "-") return Rational(-1);
    return parse_exact(s);
  };
  if (std::regex_match(text, m, full)) return BigComplex(BigFloat(parse_exact(m[1]), bits), BigFloat(part(m[2]), bits));
  if (std::regex_match(text, m, pure_imag)) return BigComplex(BigFloat(bits), BigFloat(part(m[1]), bits));
  return BigComplex(BigFloat(parse_exact(text), bits));
}

std::pair<long, long> parse_range(const std::string& text) {
  static const std::regex range(R"((-?\d+)(?:\.\.(-?\d+))?)");
  std::smatch m;
  if (!std::regex_match(text, m, range)) throw DomainError("cannot read '" + text + "' as an integer or a..b range");
  const long a = std::stol(m[1]);
  const long b = m[2].matched ? std::stol(m[2]) : a;
  if (b < a) throw DomainError("empty range '" + text + "'");
  return {a, b};
}

}  // namespace qeuler
