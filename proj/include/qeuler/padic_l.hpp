#pragma once

#include <optional>

#include "qeuler/characters.hpp"
#include "qeuler/padic.hpp"
#include "qeuler/padic_core.hpp"

namespace qeuler {

/**
 * Data of the p-adic l-function: odd prime p, working precision N, odd F
 * with p | F and modulus(chi) | F, h, a rational q = 1 mod p, and
 * xi = zeta_{xi_order}^{xi_exponent} with xi_order in {1, p}.
 */
struct PadicLContext {
  unsigned long p = 3;
  long N = 6;
  long F = 3;
  DirichletCharacter chi;
  long h = 1;
  Rational q = 4;
  unsigned long xi_order = 1;
  long xi_exponent = 0;
};

/// Throws DomainError naming the violated condition.
void validate(const PadicLContext& ctx);

/// xi as an exact cyclotomic number.
Cyclo exact_xi(const PadicLContext& ctx);

/// Value with its certified precision (certified <= value.precision()).
struct PadicValue {
  RamifiedScalar value;
  long certified = 0;
};

/// H_{E,p,q,xi}(s, a | F) =
///   ((-1)^a xi^a q^{ha} / [2]_{q^F}) <a>^{-s} sum_j C(-s,j) ([F]_q/[a]_q)^j q^{aj} E_{j,xi^F,q^F},
/// 0 < a < F, (a, p) = 1.
PadicValue partial_zeta_p(const PadicExponent& s, long a, const PadicLContext& ctx);

/// l_p(s, chi) = [2]_q sum_{a=1..F, (a,p)=1} chi(a) H_{E,p,q,xi}(s, a | F).
PadicValue l_p(const PadicExponent& s, const PadicLContext& ctx);

/// E_{n,xi,psi,q} - psi(p)[p]_q^n ([2]_q/[2]_{q^p}) E_{n,xi^p,psi,q^p}, psi = chi omega^{-n},
/// computed exactly, then embedded. With primitive = true psi is replaced by
/// the primitive character inducing it; otherwise psi lives mod lcm(f, p)
/// and psi(p) = 0.
PadicValue theorem1_rhs(long n, const PadicLContext& ctx, bool primitive = true);

/// omega^{-n}(a) H(-n, a | F) computed exactly, then embedded in Z_p[xi].
PadicValue partial_zeta_p_exact(long n, long a, const PadicLContext& ctx);

struct LevelValue {
  RamifiedScalar value;
  std::optional<RamifiedScalar> previous;
  long level = 0;
  /// The value is within p^{-certified} of the limit.
  long certified = 0;
};

/// [2]_q (S_M + S_{2M}) / 2 with S_K = sum_{1<=k<K, (k,p)=1} (-1)^k chi(k) q^{hk} xi^k <k>^{-s},
/// M = d p^level, d the prime-to-p part of F.
LevelValue l_p_series(const PadicExponent& s, const PadicLContext& ctx, long level);

/// Riemann sum at level `level` of the integral over X* of chi(x) <x>^{-s} q^{(h-1)x} xi^x d mu_{-q}(x).
LevelValue remark1_integral(const PadicExponent& s, const PadicLContext& ctx, long level);

}  // namespace qeuler
