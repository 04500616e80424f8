#pragma once

#include <string>
#include <vector>

#include "qeuler/cyclotomic.hpp"

namespace qeuler {

/**
 * Dirichlet character of odd modulus, stored as a full table of exponents:
 * chi(a) = zeta_order^{exponent(a)}, exponent -1 meaning chi(a) = 0.
 */
class DirichletCharacter {
 public:
  /// The character mod 1.
  DirichletCharacter();
  /// Table indexed by residues 0..modulus-1. `order` need not be minimal.
  DirichletCharacter(unsigned long modulus, std::vector<long> exponents, unsigned long order, std::string label = "");

  static DirichletCharacter trivial(unsigned long modulus = 1);
  /// Jacobi symbol (a / f).
  static DirichletCharacter quadratic(unsigned long f);

  unsigned long modulus() const noexcept { return modulus_; }
  unsigned long conductor() const noexcept { return conductor_; }
  /// Exact multiplicative order.
  unsigned long order() const noexcept { return order_; }
  const std::string& label() const noexcept { return label_; }

  /// Exponent of chi(a) in zeta_order, or -1 when gcd(a, modulus) > 1.
  long exponent(long a) const;
  Cyclo operator()(long a) const;

  bool is_trivial() const { return order_ == 1; }
  bool is_primitive() const { return conductor_ == modulus_; }
  /// The primitive character mod conductor() inducing this one.
  DirichletCharacter primitive() const;
  /// Same character viewed modulo a multiple M of modulus().
  DirichletCharacter lift(unsigned long M) const;

  friend DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b);
  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b);

 private:
  void normalize();

  unsigned long modulus_;
  unsigned long conductor_;
  unsigned long order_;
  std::vector<long> exps_;
  std::string label_;
};

/// All phi(modulus) characters, ordered by the exponent vectors of
/// chi(g_i) on generators g_i of the prime-power factors (smallest prime first,
/// lexicographic). Even modulus throws DomainError.
std::vector<DirichletCharacter> enumerate_characters(unsigned long modulus);

inline Cyclo char_eval(const DirichletCharacter& chi, long a) { return chi(a); }

/// omega mod p realized exactly: omega(g^k) = zeta_{p-1}^k, g the smallest primitive root.
DirichletCharacter teichmuller_character(unsigned long p);

/// chi * omega^{-n} on modulus lcm(modulus(chi), p).
DirichletCharacter twist_by_omega_power(const DirichletCharacter& chi, long n, unsigned long p);

/// "trivial", "quadratic:<f>" or "f=<modulus>,index=<k>".
DirichletCharacter parse_character(const std::string& spec);

}  // namespace qeuler
