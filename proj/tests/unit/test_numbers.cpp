#include <doctest.h>

#include "oracles/oracles.hpp"
#include "polyzeta/errors.hpp"
#include "polyzeta/exact/combinatorics.hpp"
#include "polyzeta/numbers/descents.hpp"
#include "polyzeta/numbers/eulerian.hpp"
#include "polyzeta/numbers/identities.hpp"
#include "polyzeta/numbers/signed_numbers.hpp"

using namespace polyzeta;

TEST_CASE("eulerian numbers type A") {
  CHECK(eulerian_a(3, 1) == 4);
  for (int m = 1; m <= 20; ++m) CHECK(eulerian_a(m, 0) == 1);
  BigInt row = 0;
  for (int k = 0; k <= 3; ++k) row += eulerian_a(4, k);
  CHECK(row == 24);
  CHECK(eulerian_a(4, -1) == 0);
  CHECK(eulerian_a(4, 4) == 0);
  CHECK(eulerian_a(0, 0) == 1);
}

TEST_CASE("eulerian numbers type B") {
  CHECK(eulerian_b(2, 1) == 6);
  for (int m = 0; m <= 20; ++m) CHECK(eulerian_b(m, 0) == 1);
  CHECK(eulerian_b(2, 0) + eulerian_b(2, 1) + eulerian_b(2, 2) == 8);
  CHECK(eulerian_b(3, 4) == 0);
  CHECK(eulerian_b(3, -1) == 0);
}

TEST_CASE("eulerian tables against the closed sums") {
  const EulerianTableA ta(20);
  const EulerianTableB tb(20);
  for (int m = 1; m <= 20; ++m) {
    BigInt sa = 0, sb = 0;
    for (int k = 0; k < m; ++k) {
      CHECK(ta.at(m, k) == oracle::eulerian_a(m, k));
      CHECK(ta.at(m, k) == ta.at(m, m - 1 - k));
      sa += ta.at(m, k);
    }
    for (int k = 0; k <= m; ++k) {
      CHECK(tb.at(m, k) == oracle::eulerian_b(m, k));
      CHECK(tb.at(m, k) == tb.at(m, m - k));
      sb += tb.at(m, k);
    }
    CHECK(sa == factorial(m));
    CHECK(sb == oracle::ipow(2, m) * factorial(m));
  }
  CHECK_THROWS_AS(ta.row(21), DomainError);
}

TEST_CASE("descent enumeration matches the recurrences") {
  for (int m = 1; m <= 7; ++m) CHECK(descent_counts_a(m) == EulerianTableA(m).row(m));
  for (int m = 1; m <= 5; ++m) CHECK(descent_counts_b(m) == EulerianTableB(m).row(m));
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(6) == Rational(1, 42));
  const auto ref = oracle::bernoulli(40);
  const auto tab = bernoulli_table(40);
  for (int n = 0; n <= 40; ++n) CHECK(tab[n] == ref[n]);
  for (int n = 3; n <= 40; n += 2) CHECK(tab[n].is_zero());
}

TEST_CASE("euler numbers") {
  CHECK(euler_number(0) == 1);
  CHECK(euler_number(2) == -1);
  CHECK(euler_number(4) == 5);
  CHECK(euler_number(6) == -61);
  CHECK(euler_number(3) == 0);
  const auto ref = oracle::euler_even(15);
  for (int n = 0; n <= 15; ++n) CHECK(euler_number(2 * n) == ref[n]);
}

TEST_CASE("eulerian polynomials") {
  CHECK(eulerian_poly_a(2, 1) == Rational(2));
  CHECK(eulerian_poly_a(2, 0) == Rational(1));
  CHECK(eulerian_poly_a(4, -1) == Rational(0));
  CHECK(eulerian_poly_b(1, 1) == Rational(2));
  CHECK(eulerian_poly_b(1, -1) == Rational(0));
  CHECK(eulerian_poly_b(0, Rational(17, 5)) == Rational(1));
  for (int n = 1; n <= 10; ++n) {
    CHECK(eulerian_poly_a(2 * n, -1).is_zero());
    CHECK(eulerian_poly_b(2 * n - 1, -1).is_zero());
  }
  CHECK_THROWS_AS(eulerian_poly_a(0, 1), DomainError);
}

TEST_CASE("worpitzky type B") {
  for (int k = 0; k <= 20; ++k) CHECK(worpitzky_b_check(0, k));
  CHECK(worpitzky_b_check(2, 1));
  CHECK(worpitzky_b_check(5, 3));
  for (int m = 0; m <= 10; ++m)
    for (int k = 0; k <= 20; ++k) CHECK(worpitzky_b_check(m, k));
}

TEST_CASE("alternating eulerian sums") {
  const auto e1 = eulerian_sum_identity(1);
  CHECK(e1.type_b);
  CHECK(e1.type_a);
  CHECK(e1.lhs_b == Rational(1));
  CHECK(e1.rhs_b == Rational(1));
  CHECK(e1.lhs_a == Rational(1));
  CHECK(e1.rhs_a == Rational(1));
  for (int n = 1; n <= 12; ++n) {
    const auto e = eulerian_sum_identity(n);
    CHECK(e.type_b);
    CHECK(e.type_a);
  }
}

TEST_CASE("polylog identity residual") {
  const auto r0 = polylog_b_identity_residual(0, Rational(1, 2), 64);
  CHECK(r0.closed_form == Rational(4, 5));
  CHECK(r0.residual.to_double() <= 1e-15);
  const auto r1 = polylog_b_identity_residual(1, Rational(1, 3), 64);
  // (1 - z^2) / (1 + z^2)^2 at z = 1/3
  CHECK(r1.closed_form == Rational(18, 25));
  CHECK(r1.residual.to_double() <= 1e-15);
  for (int m = 0; m <= 8; ++m) {
    for (const Rational& z : {Rational(1, 3), Rational(1, 2)}) {
      const auto r = polylog_b_identity_residual(m, z, 80);
      CHECK(r.residual <= r.tail_bound * BigFloat(2, 80));
      CHECK(r.residual <= BigFloat(pow2(-80), 80));
    }
  }
  CHECK_THROWS_AS(polylog_b_identity_residual(1, Rational(0), 64), DomainError);
  CHECK_THROWS_AS(polylog_b_identity_residual(1, Rational(1), 64), DomainError);
  CHECK_THROWS_AS(polylog_b_identity_residual(1, Rational(-1, 2), 64), DomainError);
}
