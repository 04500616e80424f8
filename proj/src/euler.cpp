#include "qeuler/euler.hpp"

namespace qeuler {

std::vector<Cyclo> twisted_euler_numbers(long N, const Cyclo& xi) {
  const Cyclo one_plus_xi = Cyclo(1) + xi;
  if (one_plus_xi.is_zero()) throw DomainError("twisted Euler numbers need xi != -1");
  const Cyclo factor = -xi / one_plus_xi;
  std::vector<Cyclo> E;
  E.reserve(static_cast<std::size_t>(N + 1));
  E.push_back(Cyclo(2) / one_plus_xi);
  for (long n = 1; n <= N; ++n) {
    Cyclo sum;
    for (long k = 0; k < n; ++k) sum += Cyclo(Rational(binomial(n, k))) * E[static_cast<std::size_t>(k)];
    E.push_back(factor * sum);
  }
  return E;
}

std::vector<Cyclo> generalized_twisted_euler_numbers(long N, const DirichletCharacter& chi, const Cyclo& xi) {
  const long d = static_cast<long>(chi.modulus());
  const Cyclo xi_d = pow(xi, d);
  const Cyclo d0 = xi_d + Cyclo(1);
  if (d0.is_zero()) throw DomainError("generalized twisted Euler numbers need xi^d != -1");
  const Cyclo d0_inv = d0.inverse();
  // Coefficients in the t^n/n! basis: numerator 2 sum_a chi(a)(-1)^a xi^a a^n,
  // denominator xi^d d^n (+1 at n = 0).
  std::vector<Cyclo> weight;
  for (long a = 0; a < d; ++a) {
    Cyclo w = chi(a) * pow(xi, a) * Cyclo(a % 2 ? -2 : 2);
    weight.push_back(w);
  }
  std::vector<Cyclo> E;
  for (long n = 0; n <= N; ++n) {
    Cyclo num;
    for (long a = 0; a < d; ++a) {
      if (weight[static_cast<std::size_t>(a)].is_zero()) continue;
      num += weight[static_cast<std::size_t>(a)] * Cyclo(Rational(ipow(BigInt(a), static_cast<unsigned long>(n))));
    }
    for (long k = 0; k < n; ++k) {
      num -= Cyclo(Rational(binomial(n, k) * ipow(BigInt(d), static_cast<unsigned long>(n - k)))) * xi_d *
             E[static_cast<std::size_t>(k)];
    }
    E.push_back(num * d0_inv);
  }
  return E;
}

}  // namespace qeuler
