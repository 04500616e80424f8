#include "qeuler/padic_l.hpp"

#include <vector>

#include "qeuler/errors.hpp"
#include "qeuler/euler.hpp"

namespace qeuler {

namespace {

long prime_to_p_part(long F, unsigned long p) {
  while (F % static_cast<long>(p) == 0) F /= static_cast<long>(p);
  return F;
}

RamifiedScalar xi_power(const PadicLContext& ctx, long k, long cap) {
  if (ctx.xi_order == 1) return RamifiedScalar(PadicScalar(ctx.p, cap, 1));
  return RamifiedScalar::xi_power(ctx.p, cap, ctx.xi_exponent * k);
}

// chi(a) embedded, one entry per residue mod the modulus.
std::vector<RamifiedScalar> embedded_character(const DirichletCharacter& chi, const PadicEmbedding& emb) {
  if (!emb.embeds(chi.order()))
    throw DomainError("character of order " + std::to_string(chi.order()) + " has values outside Z_" +
                      std::to_string(emb.prime()) + "[xi_p]");
  std::vector<RamifiedScalar> out;
  for (unsigned long a = 0; a < chi.modulus(); ++a) out.push_back(emb(chi(static_cast<long>(a))));
  return out;
}

QEulerParams<Cyclo> exact_params(const PadicLContext& ctx) {
  return QEulerParams<Cyclo>(ctx.h, Cyclo(ctx.q), exact_xi(ctx), ctx.xi_order);
}

PadicValue certify(const RamifiedScalar& v, long N) {
  PadicValue out{v.with_cap(N), 0};
  out.certified = out.value.precision();
  return out;
}

}  // namespace

void validate(const PadicLContext& ctx) {
  if (!is_odd_prime(static_cast<long>(ctx.p)))
    throw DomainError(std::to_string(ctx.p) + " is not an odd prime");
  if (ctx.N < 1) throw DomainError("p-adic precision N must be >= 1");
  if (ctx.F <= 0 || ctx.F % 2 == 0) throw DomainError("F must be an odd positive integer");
  if (ctx.F % static_cast<long>(ctx.p) != 0) throw DomainError("F must be a multiple of p");
  if (ctx.F % static_cast<long>(ctx.chi.modulus()) != 0) throw DomainError("F must be a multiple of the character modulus");
  if (valuation(ctx.q, ctx.p) < 0) throw DomainError("q must be p-integral");
  if (ctx.q == 1 || valuation(Rational(ctx.q - 1), ctx.p) < 1)
    throw DomainError("p-adic mode needs q != 1 with |1 - q|_p < p^{-1/(p-1)}");
  if (ctx.xi_order != 1 && ctx.xi_order != ctx.p)
    throw DomainError("p-adic twists need xi of order 1 or p (orders p^r, r >= 2, are not supported)");
  if (ctx.xi_order == ctx.p && ctx.xi_exponent % static_cast<long>(ctx.p) == 0)
    throw DomainError("xi of order p needs an exponent prime to p");
}

Cyclo exact_xi(const PadicLContext& ctx) {
  if (ctx.xi_order == 1) return Cyclo(1);
  return Cyclo::zeta(ctx.xi_order, ctx.xi_exponent);
}

PadicValue partial_zeta_p(const PadicExponent& s, long a, const PadicLContext& ctx) {
  validate(ctx);
  const unsigned long p = ctx.p;
  if (a <= 0 || a >= ctx.F) throw DomainError("partial zeta needs 0 < a < F");
  if (a % static_cast<long>(p) == 0) throw DomainError("partial zeta needs (a, p) = 1");
  if (!(pow(exact_xi(ctx), ctx.F) == Cyclo(1))) throw Error("xi^F != 1 although the order of xi divides F");

  const long N = ctx.N;
  const long vF = q_bracket(ctx.F, PadicScalar::from_rational(p, N + 16, ctx.q)).valuation();
  if (vF < 1) throw Error("v_p([F]_q) < 1 although p | F");
  // Smallest J with J v([F]_q) - max_{j<=J} v_p(j!) >= N.
  long J = 1;
  long max_fact = 0;
  while (true) {
    max_fact = std::max(max_fact, factorial_valuation(J, p));
    if (J * vF - max_fact >= N) break;
    ++J;
  }
  const long W = N + max_fact + 2;
  const PadicScalar q = PadicScalar::from_rational(p, W, ctx.q);
  const PadicScalar ratio = q_bracket(ctx.F, q) / q_bracket(a, q);
  const PadicScalar qa = pow(q, a);
  const PadicExponent ms = s.negated();
  const PadicScalar msw = ms.as_padic(p, W);

  // Inner Euler numbers at (q^F, xi^F = 1), exact.
  const Rational qF = pow(ctx.q, ctx.F);
  const QEulerParams<Rational> inner(ctx.h, qF, Rational(1), 1);
  PadicScalar sum(p, W, 0);
  PadicScalar factor(p, W, 1);  // ([F]/[a])^j q^{aj}
  for (long j = 0; j < J; ++j) {
    const PadicScalar Ej = PadicScalar::from_rational(p, W, euler_number(j, inner));
    sum += gen_binomial(msw, j) * factor * Ej;
    factor *= ratio * qa;
  }
  const PadicScalar bracket_power = unit_power(angle_bracket(a, q), ms, W);
  PadicScalar pref = pow(q, ctx.h * a) / two_bracket(PadicScalar::from_rational(p, W, qF));
  if (a % 2) pref = -pref;
  RamifiedScalar value = xi_power(ctx, a, W) * (pref * bracket_power * sum);
  return certify(value, N);
}

PadicValue l_p(const PadicExponent& s, const PadicLContext& ctx) {
  validate(ctx);
  const PadicEmbedding emb(ctx.p, ctx.N);
  const auto chi = embedded_character(ctx.chi, emb);
  RamifiedScalar sum(PadicScalar(ctx.p, ctx.N, 0));
  for (long a = 1; a <= ctx.F; ++a) {
    if (a % static_cast<long>(ctx.p) == 0) continue;
    const RamifiedScalar& c = chi[static_cast<std::size_t>(a % static_cast<long>(ctx.chi.modulus()))];
    if (is_zero(c)) continue;
    sum += c * partial_zeta_p(s, a, ctx).value;
  }
  return certify(sum * two_bracket(PadicScalar::from_rational(ctx.p, ctx.N, ctx.q)), ctx.N);
}

PadicValue theorem1_rhs(long n, const PadicLContext& ctx, bool primitive) {
  validate(ctx);
  if (n < 0) throw DomainError("interpolation values are at s = -n, n >= 0");
  DirichletCharacter psi = twist_by_omega_power(ctx.chi, n, ctx.p);
  if (primitive) psi = psi.primitive();
  const QEulerParams<Cyclo> params = exact_params(ctx);
  const QEulerParams<Cyclo> at_p = params.scaled(static_cast<long>(ctx.p));
  const Cyclo q(ctx.q);
  const Cyclo first = generalized_euler(n, psi, params);
  const Cyclo second = psi(static_cast<long>(ctx.p)) * pow(q_bracket(static_cast<long>(ctx.p), q), n) *
                       two_bracket(q) / two_bracket(at_p.q()) * generalized_euler(n, psi, at_p);
  const PadicEmbedding emb(ctx.p, ctx.N);
  return certify(emb(first - second), ctx.N);
}

PadicValue partial_zeta_p_exact(long n, long a, const PadicLContext& ctx) {
  validate(ctx);
  if (a % static_cast<long>(ctx.p) == 0) throw DomainError("the p-adic partial value needs (a, p) = 1");
  const Cyclo exact = partial_zeta_exact(n, a, ctx.F, exact_params(ctx));
  const PadicEmbedding emb(ctx.p, ctx.N);
  const PadicScalar omega = teichmuller(a, ctx.p, ctx.N);
  return certify(emb(exact) * pow(omega, -n), ctx.N);
}

namespace {

long level_modulus(const PadicLContext& ctx, long level) {
  if (level < 1) throw DomainError("level must be >= 1");
  const long d = prime_to_p_part(ctx.F, ctx.p);
  const long M = XDomain{static_cast<unsigned long>(d), ctx.p, level}.size();
  if (M % static_cast<long>(ctx.chi.modulus()) != 0)
    throw DomainError("level too small: the character modulus must divide d p^level");
  return M;
}

RamifiedScalar series_value(const PadicExponent& s, const PadicLContext& ctx, long level) {
  const long M = level_modulus(ctx, level);
  const unsigned long p = ctx.p;
  const long N = ctx.N;
  const PadicEmbedding emb(p, N);
  const auto chi = embedded_character(ctx.chi, emb);
  const PadicScalar q = PadicScalar::from_rational(p, N, ctx.q);
  std::vector<PadicScalar> omega_inv;
  omega_inv.push_back(PadicScalar(p, N, 0));
  for (unsigned long r = 1; r < p; ++r) omega_inv.push_back(teichmuller(static_cast<long>(r), p, N).inverse());
  const PadicExponent ms = s.negated();
  const PadicScalar step = -pow(q, ctx.h);  // (-1)^k q^{hk}
  const RamifiedScalar xi = xi_power(ctx, 1, N);

  RamifiedScalar sum(PadicScalar(p, N, 0));
  RamifiedScalar at_M = sum;
  PadicScalar bracket(p, N, 0);  // [k]_q
  PadicScalar qk(p, N, 1);       // q^k
  PadicScalar w(p, N, 1);        // (-1)^k q^{hk}
  RamifiedScalar xi_k = one_like(xi);
  for (long k = 1; k < 2 * M; ++k) {
    bracket += qk;
    qk *= q;
    w *= step;
    xi_k *= xi;
    if (k == M) at_M = sum;
    if (k % static_cast<long>(p) == 0) continue;
    const RamifiedScalar& c = chi[static_cast<std::size_t>(k % static_cast<long>(ctx.chi.modulus()))];
    if (is_zero(c)) continue;
    const PadicScalar angle = bracket * omega_inv[static_cast<std::size_t>(k % static_cast<long>(p))];
    sum += c * xi_k * (w * unit_power(angle, ms, N));
  }
  const PadicScalar half = PadicScalar::from_rational(p, N, make_rational(1, 2));
  return (at_M + sum) * (two_bracket(q) * half);
}

RamifiedScalar remark1_value(const PadicExponent& s, const PadicLContext& ctx, long level) {
  const long M = level_modulus(ctx, level);
  const unsigned long p = ctx.p;
  const long N = ctx.N;
  const PadicEmbedding emb(p, N);
  const auto chi = embedded_character(ctx.chi, emb);
  const PadicScalar q = PadicScalar::from_rational(p, N, ctx.q);
  const PadicExponent ms = s.negated();
  const RamifiedScalar xi = xi_power(ctx, 1, N);
  const XDomain dom{static_cast<unsigned long>(M / ipow(BigInt(p), static_cast<unsigned long>(level)).get_si()), p,
                    level};
  auto integrand = [&](long x) -> RamifiedScalar {
    if (x % static_cast<long>(p) == 0) return RamifiedScalar(PadicScalar(p, N, 0));
    const RamifiedScalar& c = chi[static_cast<std::size_t>(x % static_cast<long>(ctx.chi.modulus()))];
    if (is_zero(c)) return RamifiedScalar(PadicScalar(p, N, 0));
    const PadicScalar base = unit_power(angle_bracket(x, q), ms, N) * pow(q, (ctx.h - 1) * x);
    return c * pow(xi, x) * base;
  };
  return riemann_sum<RamifiedScalar>(integrand, Measure::fermionic, RamifiedScalar(q), dom.size());
}

LevelValue make_level(RamifiedScalar value, std::optional<RamifiedScalar> previous, long level) {
  LevelValue out{std::move(value), std::move(previous), level, 0};
  out.certified = std::min(level, out.value.precision());
  return out;
}

}  // namespace

LevelValue l_p_series(const PadicExponent& s, const PadicLContext& ctx, long level) {
  validate(ctx);
  std::optional<RamifiedScalar> previous;
  if (level >= 2) previous = series_value(s, ctx, level - 1);
  return make_level(series_value(s, ctx, level), previous, level);
}

LevelValue remark1_integral(const PadicExponent& s, const PadicLContext& ctx, long level) {
  validate(ctx);
  std::optional<RamifiedScalar> previous;
  if (level >= 2) previous = remark1_value(s, ctx, level - 1);
  return make_level(remark1_value(s, ctx, level), previous, level);
}

}  // namespace qeuler
