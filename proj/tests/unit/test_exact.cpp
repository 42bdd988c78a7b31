#include <doctest.h>

#include <random>

#include "oracles/oracles.hpp"
#include "polyzeta/errors.hpp"
#include "polyzeta/exact/combinatorics.hpp"
#include "polyzeta/exact/rational.hpp"
#include "polyzeta/numeric/bigfloat.hpp"

using namespace polyzeta;

TEST_CASE("rational stays canonical") {
  const Rational a(BigInt(6), BigInt(-4));
  CHECK(a.str() == "-3/2");
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(Rational(4).str() == "4/1");
  CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
  CHECK((Rational(2, 3) * Rational(3, 2)) == Rational(1));
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-2, 3).abs() == Rational(2, 3));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(pow2(-3) == Rational(1, 8));
}

TEST_CASE("rational error paths") {
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
  CHECK_THROWS_AS(Rational(0).pow(-1), DomainError);
  CHECK_THROWS_AS(Rational::parse("1/x"), DomainError);
}

TEST_CASE("rational field axioms on random values") {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<long> d(-500, 500);
  auto draw = [&] {
    long den = d(rng);
    if (den == 0) den = 1;
    return Rational(BigInt(d(rng)), BigInt(den));
  };
  for (int i = 0; i < 200; ++i) {
    const Rational a = draw(), b = draw(), c = draw();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(Rational::parse(a.str()) == a);
  }
}

TEST_CASE("binomial coefficients") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(3, -1) == 0);
  CHECK(binom(4, 7) == 0);
  CHECK(binom(0, 0) == 1);
  CHECK_THROWS_WITH_AS(binom(-1, 0), "unsupported-binomial-domain", DomainError);
  const auto rows = oracle::pascal(40);
  for (int n = 0; n <= 40; ++n)
    for (int k = 0; k <= n; ++k) CHECK(binom(n, k) == rows[n][k]);
}

TEST_CASE("factorials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(10) == 3628800);
  for (int m = 0; m <= 30; ++m) CHECK(factorial(m) == oracle::fact(m));
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(5) == 15);
  CHECK(double_factorial(6) == 48);
  CHECK_THROWS_AS(double_factorial(-2), DomainError);
  for (int m = 1; m <= 30; ++m) CHECK(double_factorial(m) * double_factorial(m - 1) == factorial(m));
}

TEST_CASE("bigfloat basics") {
  const int p = 128;
  CHECK(BigFloat(Rational(1, 4), p).to_double() == 0.25);
  CHECK((BigFloat(1, p) / BigFloat(3, p)).to_decimal(10) == "0.3333333333");
  const BigFloat pi128 = pi(p);
  CHECK(pi128.to_decimal(20) == "3.1415926535897932385");
  CHECK(root(BigFloat(Rational(1, 36), p), 2).to_decimal(10) == "0.1666666667");
  CHECK(bits_for_digits(30) >= 100);
  // Binary ops take the larger precision.
  CHECK((BigFloat(1, 64) + BigFloat(1, 200)).precision() == 200);
  CHECK(abs(tanh(BigFloat(1, p)) - sinh(BigFloat(1, p)) / cosh(BigFloat(1, p))) <= BigFloat(pow2(-120), p));
  CHECK(abs(sech(BigFloat(2, p)) * cosh(BigFloat(2, p)) - BigFloat(1, p)) <= BigFloat(pow2(-120), p));
}
