#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qeuler/bigfloat.hpp"
#include "qeuler/binomial.hpp"
#include "qeuler/cyclotomic.hpp"
#include "qeuler/errors.hpp"

using namespace qeuler;

namespace {

Cyclo random_cyclo(std::mt19937_64& rng, unsigned long m) {
  std::vector<Rational> poly;
  for (int i = 0; i < 2 * static_cast<int>(m); ++i) {
    long num = static_cast<long>(rng() % 21) - 10;
    long den = 1 + static_cast<long>(rng() % 7);
    poly.push_back(make_rational(num, den));
  }
  return cyclo_reduce(poly, m);
}

}  // namespace

TEST_CASE("rationals stay normalized") {
  const Rational r = make_rational(6, -4);
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK(parse_rational("10/-4") == make_rational(-5, 2));
  CHECK(to_string(make_rational(-2, 5)) == "-2/5");
  CHECK_THROWS_AS(make_rational(1, 0), DomainError);
  CHECK(valuation(Rational(make_rational(50, 3)), 5) == 2);
  CHECK(factorial_valuation(25, 5) == 6);
}

TEST_CASE("cyclo_reduce examples") {
  const std::vector<Rational> zeta4 = {0, 1};
  Cyclo a = cyclo_reduce(zeta4, 4);
  CHECK(a.coefficients() == std::vector<Rational>{0, 1});
  const std::vector<Rational> zeta4_sq = {0, 0, 1};
  CHECK(cyclo_reduce(zeta4_sq, 4) == Cyclo(-1));
  CHECK(cyclo_reduce(zeta4_sq, 4).coefficients() == std::vector<Rational>{-1, 0});
  const std::vector<Rational> zeta3_cube = {0, 0, 0, 1};
  CHECK(cyclo_reduce(zeta3_cube, 3) == Cyclo(1));
  CHECK(cyclo_reduce(zeta3_cube, 3).coefficients() == std::vector<Rational>{1, 0});
  CHECK_THROWS_AS(cyclo_reduce(zeta4, 0), DomainError);
}

TEST_CASE("coefficient vectors have length phi(m)") {
  for (unsigned long m : {1ul, 2ul, 3ul, 4ul, 5ul, 6ul, 12ul, 15ul, 20ul}) {
    const Cyclo z = Cyclo::zeta(m);
    CHECK(z.coefficients().size() == euler_phi(m));
  }
  CHECK(cyclotomic_polynomial(6) == std::vector<BigInt>{1, -1, 1});
}

TEST_CASE("roots of unity: zeta^m = 1 and the power sum vanishes") {
  for (unsigned long m = 2; m <= 24; ++m) {
    const Cyclo z = Cyclo::zeta(m);
    CHECK(pow(z, static_cast<long>(m)) == Cyclo(1));
    Cyclo sum(0);
    for (unsigned long k = 0; k < m; ++k) sum += pow(z, static_cast<long>(k));
    CHECK(sum.is_zero());
    CHECK(root_of_unity_order(z) == m);
  }
}

TEST_CASE("self-multiplication does not alias") {
  Cyclo z = Cyclo::zeta(5);
  z *= z;
  CHECK(z == Cyclo::zeta(5, 2));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(7);
  for (unsigned long m : {3ul, 4ul, 5ul, 12ul}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Cyclo a = random_cyclo(rng, m), b = random_cyclo(rng, m), c = random_cyclo(rng, m);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK(a * a.inverse() == Cyclo(1));
    }
  }
}

TEST_CASE("mixed orders lift to the lcm and project back") {
  const Cyclo z3 = Cyclo::zeta(3), z4 = Cyclo::zeta(4);
  const Cyclo prod = z3 * z4;
  CHECK(prod.order() == 12);
  CHECK(prod == Cyclo::zeta(12, 7));
  CHECK(z3.lift(12).project(3) == z3);
  CHECK(z3.lift(12).project(3).coefficients() == z3.coefficients());
  CHECK_THROWS_AS(z4.lift(12).project(3), DomainError);
  CHECK((z3 * z3.inverse()).simplified().order() == 1);
}

TEST_CASE("gen_binomial examples") {
  CHECK(gen_binomial(Rational(3), 2) == 3);
  CHECK(gen_binomial(Rational(-1), 2) == 1);
  CHECK(gen_binomial(make_rational(1, 2), 2) == make_rational(-1, 8));
  CHECK(gen_binomial(make_rational(7, 3), 0) == 1);
  CHECK_THROWS_AS(gen_binomial(Rational(1), -1), DomainError);
}

TEST_CASE("gen_binomial Pascal rule") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Rational s = make_rational(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 9));
    for (long j = 1; j <= 20; ++j)
      CHECK(gen_binomial(s, j) == gen_binomial(Rational(s - 1), j) + gen_binomial(Rational(s - 1), j - 1));
  }
}

TEST_CASE("embed_complex examples") {
  const long bits = 128;
  const BigFloat tol = BigFloat::exp2(-120, bits);
  const BigComplex one = embed_complex(Cyclo(1).lift(7), bits);
  CHECK(abs(one - BigComplex(1.0, 0.0, bits)) <= tol);
  const BigComplex i = embed_complex(Cyclo::zeta(4), bits);
  CHECK(abs(i - BigComplex(0.0, 1.0, bits)) <= tol);
  // cos, sin of 2 pi / 3 from an independent evaluation.
  const BigComplex w = embed_complex(Cyclo::zeta(3), bits);
  const BigComplex expected(BigFloat(make_rational(-1, 2), bits),
                            sqrt(BigFloat(Rational(3), bits)) / BigFloat(Rational(2), bits));
  CHECK(abs(w - expected) <= tol);
  CHECK(std::abs(w.imag().to_double() - 0.866025403784438646763723170753) < 1e-15);
}

TEST_CASE("embed_complex is a ring homomorphism up to rounding") {
  std::mt19937_64 rng(3);
  const long bits = 96;
  for (unsigned long m : {3ul, 5ul, 8ul, 12ul}) {
    const Cyclo a = random_cyclo(rng, m), b = random_cyclo(rng, m);
    const BigComplex ea = embed_complex(a, bits), eb = embed_complex(b, bits);
    const BigFloat slack = BigFloat::exp2(20 - bits, bits) * (BigFloat(1.0, bits) + abs(ea) * abs(eb));
    CHECK(abs(embed_complex(a * b, bits) - ea * eb) <= slack);
    CHECK(abs(embed_complex(a + b, bits) - (ea + eb)) <= slack);
  }
}
