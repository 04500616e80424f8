#pragma once

#include <string>

#include "qeuler/bigfloat.hpp"
#include "qeuler/cyclotomic.hpp"
#include "qeuler/rational.hpp"

namespace qeuler {

/// xi = zeta_order^exponent.
struct XiSpec {
  unsigned long order = 1;
  long exponent = 0;

  Cyclo value() const { return order == 1 ? Cyclo(1) : Cyclo::zeta(order, exponent); }
  std::string to_string() const;
};

/// "1", "-1", "zeta:<m>" or "zeta:<m>^<k>". The order is reduced to the exact order.
XiSpec parse_xi(const std::string& text);
/// zeta_m^1, or 1 for m = 1.
XiSpec xi_of_order(unsigned long m);

/// "a/b", an integer, or a terminating decimal such as "0.5" or "-1.25e-3", read exactly.
Rational parse_exact(const std::string& text);

/// "1+p", "1+<k>p", "1+p^<e>", "1-p" (p substituted), or anything parse_exact accepts.
Rational parse_padic_q(const std::string& text, unsigned long p);

/// "<x>", "<x>i", "<x>+<y>i" or "<x>-<y>i" with parse_exact components.
BigComplex parse_complex(const std::string& text, long bits);

/// Integer or integer range "a..b" (inclusive).
std::pair<long, long> parse_range(const std::string& text);

}  // namespace qeuler
