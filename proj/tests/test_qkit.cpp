#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qeuler/cyclotomic.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/qkit.hpp"

using namespace qeuler;

TEST_CASE("q_bracket examples") {
  CHECK(q_bracket(3, Rational(2)) == 7);
  CHECK(q_bracket(0, make_rational(3, 7)) == 0);
  CHECK(q_bracket(5, Rational(1)) == 5);
  CHECK(q_bracket(-2, Rational(2)) == make_rational(-3, 4));
}

TEST_CASE("neg_q_bracket examples") {
  CHECK(neg_q_bracket(3, Rational(2)) == 3);
  CHECK(neg_q_bracket(2, Rational(2)) == -1);
  CHECK(neg_q_bracket(0, Rational(5)) == 0);
  CHECK_THROWS_AS(neg_q_bracket(3, Rational(-1)), DomainError);
}

TEST_CASE("two_bracket examples") {
  CHECK(two_bracket(make_rational(1, 2)) == make_rational(3, 2));
  CHECK(two_bracket(Rational(1)) == 2);
  CHECK(two_bracket(Cyclo::zeta(3)) == Cyclo(1) + Cyclo::zeta(3));
}

TEST_CASE("scaling identity [xy]_q = [x]_{q^y} [y]_q") {
  for (const Rational q : {make_rational(1, 2), make_rational(-2, 3), Rational(3)}) {
    for (long x = 0; x <= 6; ++x)
      for (long y = 0; y <= 6; ++y) CHECK(q_bracket(x * y, q) == q_bracket(x, pow(q, y)) * q_bracket(y, q));
  }
  const Cyclo q = Cyclo(make_rational(2, 5)) * Cyclo::zeta(3);
  CHECK(q_bracket(15, q) == q_bracket(5, pow(q, 3)) * q_bracket(3, q));
}

TEST_CASE("[x]_{-q} (1+q) + (-q)^x = 1") {
  for (const Rational q : {make_rational(1, 2), make_rational(5, 3), Rational(-3)}) {
    for (long x = 0; x <= 30; ++x) CHECK(neg_q_bracket(x, q) * (1 + q) + pow(Rational(-q), x) == 1);
  }
}

TEST_CASE("q_bracket equals the geometric sum") {
  const Rational q = make_rational(-3, 5);
  Rational sum = 0;
  for (long x = 0; x <= 100; ++x) {
    CHECK(q_bracket(x, q) == sum);
    sum += pow(q, x);
  }
}

TEST_CASE("parameters: xi validation and scaling") {
  QEulerParams<Cyclo> params(2, Cyclo(make_rational(2, 3)), Cyclo::zeta(6), 6);
  CHECK_NOTHROW(validate_xi(params));
  const auto scaled = params.scaled(4);
  CHECK(scaled.xi_order == 3);
  CHECK(scaled.q() == pow(Cyclo(make_rational(2, 3)), 4));
  CHECK(scaled.q_power(make_rational(1, 4)) == Cyclo(make_rational(2, 3)));
  CHECK_THROWS_AS(params.q_power(make_rational(1, 2)), DomainError);
  QEulerParams<Cyclo> bad(1, Cyclo(2), Cyclo::zeta(6), 4);
  CHECK_THROWS_AS(validate_xi(bad), DomainError);
}
