#include <doctest.h>

#include "oracles/oracles.hpp"
#include "polyzeta/errors.hpp"
#include "polyzeta/quad/integrals.hpp"
#include "polyzeta/quad/kernels.hpp"
#include "polyzeta/quad/references.hpp"

using namespace polyzeta;

namespace {

constexpr int kBits = 64;

double rel(const BigFloat& a, const BigFloat& b) { return (abs(a - b) / abs(b)).to_double(); }
BigFloat dec(const std::string& s) { return BigFloat(s, 128); }

}  // namespace

TEST_CASE("zeta references") {
  CHECK(zeta_ref(3, 128).to_decimal(20) == "1.2020569031595942854");
  CHECK(zeta_ref(5, 128).to_decimal(20) == "1.0369277551433699263");
  CHECK(zeta_ref(3, 64) > zeta_ref(5, 64));
  CHECK(zeta_ref(5, 64) > zeta_ref(7, 64));
  CHECK(zeta_ref(7, 64) > BigFloat(1, 64));
  for (int s = 3; s <= 13; s += 2) {
    for (int bits : {64, 200}) {
      CHECK(abs(zeta_ref(s, bits) - zeta_ref_alternating(s, bits)) <= BigFloat(pow2(8 - bits), bits));
    }
  }
  CHECK_THROWS_AS(zeta_ref(4, 64), DomainError);
  CHECK_THROWS_AS(zeta_ref(1, 64), DomainError);
}

TEST_CASE("beta references") {
  CHECK(beta_ref(2, 128).to_decimal(19) == "0.9159655941772190151");
  CHECK(beta_ref(4, 128).to_decimal(19) == "0.9889445517411053361");
  for (int s = 2; s <= 12; s += 2) {
    for (int bits : {64, 200}) {
      CHECK(abs(beta_ref(s, bits) - beta_ref_hurwitz(s, bits)) <= BigFloat(pow2(8 - bits), bits));
    }
  }
  // Consecutive partial sums bracket the limit.
  const BigFloat b2 = beta_ref(2, 128);
  for (long m = 1; m <= 40; ++m) {
    const BigFloat lo = beta_partial_sum(2, 2 * m, 128), hi = beta_partial_sum(2, 2 * m + 1, 128);
    CHECK(lo < b2);
    CHECK(b2 < hi);
  }
  CHECK_THROWS_AS(beta_ref(3, 64), DomainError);
}

TEST_CASE("integrals against the frozen oracle values") {
  for (int n = 1; n <= 6; ++n) {
    const QuadResult b = integral_beta(n, kBits);
    const QuadResult z = integral_zeta(n, kBits);
    CHECK(rel(b.value, dec(oracle::beta_over_pi()[n - 1])) <= 1e-15);
    CHECK(rel(z.value, dec(oracle::zeta_over_pi()[n - 1])) <= 1e-15);
    CHECK(rel(b.value, beta_target(n, kBits)) <= 1e-12);
    CHECK(rel(z.value, zeta_target(n, kBits)) <= 1e-12);
    CHECK(b.est_error <= BigFloat(pow2(-kBits), kBits));
    CHECK(b.route == QuadRoute::TanhSubstitution);
    CHECK(b.nodes_used > 0);
  }
  // With Xi_1 = 1/4 divided out.
  CHECK(rel(integral_beta(1, kBits).value * BigFloat(4, kBits), dec("1.16624361612327512056")) <= 1e-15);
}

TEST_CASE("hyperbolic route matches the tanh route") {
  for (int n = 1; n <= 5; ++n) {
    const QuadResult hb = integral_hyperbolic_route(Family::Xi, n, kBits);
    const QuadResult ha = integral_hyperbolic_route(Family::Lambda, n, kBits);
    CHECK(hb.route == QuadRoute::HyperbolicForm);
    const QuadResult b = integral_beta(n, kBits), z = integral_zeta(n, kBits);
    CHECK(abs(hb.value - b.value) <= hb.est_error + b.est_error + BigFloat(pow2(-kBits), kBits));
    CHECK(abs(ha.value - z.value) <= ha.est_error + z.est_error + BigFloat(pow2(-kBits), kBits));
    CHECK(rel(hb.value, b.value) <= 1e-10);
    CHECK(rel(ha.value, z.value) <= 1e-10);
  }
}

TEST_CASE("step halving gains at least 4x per level") {
  for (int n : {1, 3, 6}) {
    const QuadResult q = integral_zeta(n, 128);
    REQUIRE(q.history.size() >= 2);
    for (std::size_t i = 1; i < q.history.size(); ++i) CHECK(q.history[i] * 4 <= q.history[i - 1]);
  }
}

TEST_CASE("more working precision moves the value by less than the estimate") {
  for (int n : {1, 4}) {
    const QuadResult a = integral_beta(n, kBits), b = integral_beta(n, kBits + 64);
    CHECK(abs(a.value - b.value) <= a.est_error + BigFloat(pow2(-kBits), kBits));
  }
}

TEST_CASE("node budget exhaustion carries the best estimate") {
  QuadOptions opt;
  opt.max_levels = 1;
  try {
    (void)integral_beta(2, 400, opt);
    FAIL("expected QuadratureError");
  } catch (const QuadratureError& e) {
    CHECK(e.best().history.size() == 1);
    CHECK(rel(e.best().value, dec(oracle::beta_over_pi()[1])) <= 1e-3);
  }
  CHECK_THROWS_AS(integral_beta(0, 64), DomainError);
  CHECK_THROWS_AS(integral_zeta(65, 64), DomainError);
}

TEST_CASE("OpenMP node evaluation is bit-identical to the serial reference") {
  for (Family f : {Family::Xi, Family::Lambda}) {
    const Integrand tanh_k(f == Family::Xi ? KernelKind::BetaTanh : KernelKind::ZetaTanh, build(f, 5), 160);
    const Integrand hyp = Integrand::hyperbolic(f, 5, 160);
    const BigFloat h(Rational(1, 16), 160);
    std::vector<long> ks;
    for (long k = 0; k < 300; ++k) ks.push_back(k);
    for (const Integrand* g : {&tanh_k, &hyp}) {
      const auto s = evaluate_nodes(*g, h, ks, Exec::Serial);
      const auto p = evaluate_nodes(*g, h, ks, Exec::Parallel);
      REQUIRE(s.size() == p.size());
      for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] == p[i]);
    }
    // The tanh integrand is the hyperbolic one times the family prefactor (n = 5).
    const Rational pref = f == Family::Xi ? Rational(1) / (pow2(18) * Rational(oracle::fact(9)))
                                          : Rational(2) / (Rational(2047) * Rational(oracle::fact(10)));
    for (const Rational& u : {Rational(3, 7), Rational(5, 2)}) {
      const BigFloat x(u, 160);
      CHECK(rel(tanh_k(x), hyp(x) * BigFloat(pref, 160)) <= 1e-35);
    }
  }
  QuadOptions serial;
  serial.exec = Exec::Serial;
  CHECK(integral_zeta(3, kBits, serial).value == integral_zeta(3, kBits).value);
}

TEST_CASE("removable singularity at zero") {
  const Integrand f(KernelKind::BetaTanh, build(Family::Xi, 3), 128);
  CHECK(f(BigFloat(0, 128)) == BigFloat(build(Family::Xi, 3).eval(0), 128));
  const BigFloat tiny(pow2(-60), 128);
  CHECK(abs(f(tiny) - f.at_zero()).to_double() < 1e-30);
  const Integrand g = Integrand::hyperbolic(Family::Lambda, 3, 128);
  CHECK(abs(g(tiny) - g.at_zero()) / abs(g.at_zero()) < BigFloat(pow2(-90), 128));
}
