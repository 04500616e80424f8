#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qeuler/euler.hpp"
#include "qeuler/padic.hpp"
#include "qeuler/padic_core.hpp"

using namespace qeuler;

namespace {

BigInt modpow(long a, long e, const BigInt& m) {
  BigInt r;
  const BigInt base(a);
  mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e), m.get_mpz_t());
  return r;
}

}  // namespace

TEST_CASE("PadicScalar arithmetic tracks precision") {
  const auto a = PadicScalar::from_rational(5, 6, Rational(25));
  CHECK(a.valuation() == 2);
  const auto b = PadicScalar::from_rational(5, 6, make_rational(1, 6));
  CHECK(b.residue() * 6 % 15625 == 1);
  CHECK((a * b).precision() == 6);
  const auto c = a / PadicScalar::from_rational(5, 6, Rational(5));
  CHECK(c.precision() == 5);
  CHECK(c == PadicScalar::from_rational(5, 5, Rational(5)));
  CHECK_THROWS(PadicScalar::from_rational(5, 6, make_rational(1, 5)));
  CHECK(distance_valuation(PadicScalar::from_rational(3, 6, Rational(1)), PadicScalar::from_rational(3, 6, Rational(28))) == 3);
}

TEST_CASE("Teichmuller representatives") {
  CHECK(teichmuller(2, 5, 2).residue() == 7);
  CHECK(teichmuller(4, 5, 6).residue() == 15624);
  CHECK(teichmuller(1, 7, 8).residue() == 1);
  for (unsigned long p : {3ul, 5ul, 7ul, 11ul}) {
    for (long N = 1; N <= 8; ++N) {
      const BigInt pN = ipow(BigInt(p), static_cast<unsigned long>(N));
      for (long a = 1; a < static_cast<long>(p); ++a) {
        const PadicScalar w = teichmuller(a, p, N);
        CHECK(pow(w, static_cast<long>(p - 1)) == PadicScalar(p, N, 1));
        CHECK(w.residue() % p == static_cast<unsigned long>(a));
        // omega(a) = lim a^{p^k}; p^N iterations are enough.
        CHECK(w.residue() == modpow(a, static_cast<long>(ipow(BigInt(p), static_cast<unsigned long>(N)).get_ui()), pN));
      }
    }
  }
}

TEST_CASE("angle bracket and unit powers") {
  const auto q = PadicScalar::from_rational(5, 4, Rational(6));
  CHECK(angle_bracket(2, q).residue() == 601);
  CHECK_THROWS_AS(validate_padic_q(PadicScalar::from_rational(5, 4, Rational(2))), DomainError);
  const auto u = PadicScalar::from_rational(5, 3, Rational(6));
  CHECK(one_unit_power(u, PadicScalar::from_rational(5, 3, Rational(-1)), 3).residue() == 21);
  CHECK(one_unit_power(u, PadicScalar::from_rational(5, 3, Rational(2)), 3).residue() == 36);
  CHECK(one_unit_power(u, PadicScalar::from_rational(5, 3, Rational(0)), 3).residue() == 1);
  for (unsigned long p : {3ul, 5ul, 7ul}) {
    const long N = 8;
    const auto v = PadicScalar::from_rational(p, N, Rational(1 + static_cast<long>(p)));
    const Rational s = make_rational(1, 2), t = make_rational(-2, 7 == p ? 11 : 7);
    const auto us = one_unit_power(v, PadicScalar::from_rational(p, N, s), N);
    const auto ut = one_unit_power(v, PadicScalar::from_rational(p, N, t), N);
    const auto ust = one_unit_power(v, PadicScalar::from_rational(p, N, Rational(s + t)), N);
    CHECK(us * ut == ust);
    CHECK(us * us == v);
    CHECK(unit_power(v, PadicExponent::of(Rational(3)), N) == pow(v, 3));
    CHECK(unit_power(v, PadicExponent::of(s), N) == us);
  }
  CHECK_THROWS(one_unit_power(PadicScalar::from_rational(5, 3, Rational(2)), PadicScalar::from_rational(5, 3, Rational(1)), 3));
}

TEST_CASE("ramified extension") {
  for (unsigned long p : {3ul, 5ul, 7ul}) {
    const long cap = 6;
    const auto pi = RamifiedScalar::pi(p, cap);
    const auto one = RamifiedScalar(PadicScalar(p, cap, 1));
    // Phi_p(1 + pi) = 0.
    RamifiedScalar phi = RamifiedScalar(PadicScalar(p, cap, 0));
    for (unsigned long k = 0; k < p; ++k) phi += pow(one + pi, static_cast<long>(k));
    CHECK(is_zero(phi));
    CHECK(pi.valuation() == make_rational(1, static_cast<long>(p - 1)));
    const auto ratio = pow(pi, static_cast<long>(p - 1)) / RamifiedScalar(PadicScalar(p, cap, BigInt(p)));
    CHECK(ratio.is_unit());
    CHECK(ratio.precision() == cap - 1);
    CHECK(pow(RamifiedScalar::xi_power(p, cap, 1), static_cast<long>(p)) == one);
    const auto a = pi * pi + RamifiedScalar(PadicScalar(p, cap, 2));
    const auto b = pi * RamifiedScalar(PadicScalar(p, cap, 4)) + RamifiedScalar(PadicScalar(p, cap, 5));
    CHECK((a * b).reduce_mod_pi() == a.reduce_mod_pi() * b.reduce_mod_pi() % p);
    CHECK((a + b).reduce_mod_pi() == (a.reduce_mod_pi() + b.reduce_mod_pi()) % p);
    CHECK(pi.reduce_mod_pi() == 0);
    const auto c = pow(pi, 3) * a;
    CHECK((c * pi).valuation() == c.valuation() + pi.valuation());
    CHECK(a * a.inverse() == one);
  }
}

TEST_CASE("embedding of cyclotomic numbers") {
  for (unsigned long p : {3ul, 5ul, 7ul}) {
    const PadicEmbedding emb(p, 6);
    const auto one = RamifiedScalar(PadicScalar(p, 6, 1));
    CHECK(emb(Cyclo::zeta(p)) == one + RamifiedScalar::pi(p, 6));
    CHECK(emb(pow(Cyclo::zeta(p - 1), static_cast<long>(p - 1))) == one);
    CHECK(emb(Cyclo::zeta(p - 1)) == RamifiedScalar(teichmuller(static_cast<long>(emb.primitive_root()), p, 6)));
    Cyclo sum(0);
    for (unsigned long k = 0; k < p; ++k) sum += Cyclo::zeta(p, static_cast<long>(k));
    CHECK(is_zero(emb(sum)));
    const Cyclo x = Cyclo::zeta(p) * Cyclo(make_rational(2, 3 == p ? 5 : 3)) + Cyclo::zeta(p - 1);
    const Cyclo y = Cyclo::zeta(p * (p - 1), 5) + Cyclo(1);
    CHECK(emb(x * y) == emb(x) * emb(y));
    CHECK(emb.embeds(p * (p - 1)));
    CHECK_FALSE(emb.embeds(2 * p * (p - 1)));
  }
}

TEST_CASE("fermionic integrals of 1 and x") {
  for (unsigned long p : {3ul, 5ul, 7ul})
    for (unsigned long d : {1ul, 3ul})
      for (long N = 0; N <= 5; ++N) {
        const long cap = std::max(N, 1l);
        const XDomain dom{d, p, N};
        const PadicScalar minus_one(p, cap, -1);
        const auto I1 = fermionic_integral<PadicScalar>([&](long) { return PadicScalar(p, cap, 1); },
                                                        Measure::alternating, minus_one, dom);
        CHECK(I1.value == PadicScalar(p, cap, 1));
        const auto Ix = fermionic_integral<PadicScalar>([&](long x) { return PadicScalar(p, cap, BigInt(x)); },
                                                        Measure::alternating, minus_one, dom);
        if (N >= 1) CHECK(Ix.value == PadicScalar::from_rational(p, N, make_rational(-1, 2)));
      }
}

TEST_CASE("functional equations of the alternating integral") {
  for (unsigned long p : {3ul, 5ul, 7ul}) {
    const long N = 6;
    const XDomain dom{1, p, N};
    const PadicScalar like(p, N, 1);
    auto f = [&](long x) { return pow(PadicScalar(p, N, BigInt(x)), 3) + PadicScalar(p, N, 2); };
    for (long n = 1; n <= 4; ++n) {
      const auto r = check_functional_equation(f, n, dom, 0, like);
      CHECK(r.pass);
      CHECK(r.bound == std::to_string(p) + "^-6");
    }
    CHECK_THROWS_AS(check_functional_equation(f, 0, dom, 0, like), DomainError);
  }
}

TEST_CASE("Riemann sums of the q-integral reproduce the Euler polynomials") {
  for (unsigned long p : {3ul, 5ul}) {
    const long N = 6;
    const Rational q = 1 + static_cast<long>(p);
    const PadicEmbedding emb(p, N);
    for (long h = 1; h <= 2; ++h)
      for (long n = 0; n <= 3; ++n) {
        const RamifiedScalar lhs =
            q_moment_riemann_sum(n, 1, h, PadicScalar::from_rational(p, N, q), RamifiedScalar(PadicScalar(p, N, 1)), XDomain{1, p, N});
        const QEulerParams<Cyclo> params(h, Cyclo(q), Cyclo(1), 1);
        CHECK(padic_distance(lhs, emb(euler_poly(n, Rational(1), params))) >= N);
      }
  }
}
