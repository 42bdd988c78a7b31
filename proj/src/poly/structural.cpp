#include "polyzeta/poly/structural.hpp"

#include <random>

#include "polyzeta/exact/combinatorics.hpp"

namespace polyzeta {
namespace {

int sign_pow(int e) { return e % 2 == 0 ? 1 : -1; }

bool alternates(const std::vector<int>& signs, int top_sign) {
  const int n = static_cast<int>(signs.size());
  for (int t = 0; t < n; ++t) {
    if (signs[static_cast<std::size_t>(t)] != top_sign * sign_pow(n - 1 - t)) return false;
  }
  return true;
}

std::vector<Check> family_checks(Family family, int n) {
  std::vector<Check> out;
  const EvenPolynomial p = build(family, n);
  const CoeffVector cv = coeff_vector(coeff_family(family), n);
  const int top_sign = sign_pow(n + 1);

  auto add = [&](std::string name, bool ok) -> Check& {
    out.push_back(make_check(std::move(name), n, ok));
    return out.back().with_family(family);
  };

  add("cross_construction", p == build_via_moebius(family, n));

  const Rational lead = expected_leading(family, n);
  add("leading_coefficient", p.leading() == lead).with_exact(p.leading());

  BigInt top_c = family == Family::Xi ? BigInt(pow2(2 * n - 2).num() * factorial(2 * n - 1))
                                      : BigInt(factorial(2 * n) / 2);
  add("leading_coeff_vector", cv.values.back() == top_c).exact_value = Rational(cv.values.back()).str();

  const Rational at0 = p.eval(0);
  add("value_at_zero", at0 == expected_value_at_zero(family, n)).with_exact(at0);

  const Rational at1 = p.eval(1);
  add("value_at_one", at1 == expected_value_at_one(family, n)).with_exact(at1);

  BigInt csum = 0;
  for (const auto& v : cv.values) csum += v;
  add("coefficient_sum", Rational(csum) == pow2(2 * n - 2)).with_exact(Rational(csum));

  std::vector<int> poly_signs, c_signs;
  for (const auto& c : p.coeffs()) poly_signs.push_back(c.sign());
  for (const auto& v : cv.values) c_signs.push_back(sgn(v));
  add("sign_alternation", alternates(poly_signs, top_sign) && alternates(c_signs, 1));

  bool log_concave = true;
  for (int t = 1; t + 1 < n; ++t) {
    const BigInt a = abs(cv.values[static_cast<std::size_t>(t - 1)]);
    const BigInt b = abs(cv.values[static_cast<std::size_t>(t)]);
    const BigInt c = abs(cv.values[static_cast<std::size_t>(t + 1)]);
    if (b * b < a * c) log_concave = false;
  }
  add("log_concavity", log_concave).note = n < 3 ? std::optional<std::string>("vacuous for n < 3") : std::nullopt;

  bool positive = true;
  for (const Rational& x : {Rational(3, 2), Rational(2), Rational(5)}) {
    if ((Rational(top_sign) * p.eval(x)).sign() <= 0) positive = false;
  }
  add("positive_beyond_one", positive).note = "spot check at x = 3/2, 2, 5";
  return out;
}

}  // namespace

Rational grid_sup_abs(const EvenPolynomial& p, int points, Exec exec) {
  std::vector<Rational> values(static_cast<std::size_t>(points));
  const BigInt den = points + 1;
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (int j = 1; j <= points; ++j) values[static_cast<std::size_t>(j - 1)] = p.eval(Rational(BigInt(j), den)).abs();
  } else {
    for (int j = 1; j <= points; ++j) values[static_cast<std::size_t>(j - 1)] = p.eval(Rational(BigInt(j), den)).abs();
  }
  Rational best = 0;
  for (const auto& v : values) best = v > best ? v : best;
  return best;
}

std::vector<Check> structural_checks(int n) {
  std::vector<Check> out = family_checks(Family::Xi, n);
  for (auto& c : family_checks(Family::Lambda, n)) out.push_back(std::move(c));
  return out;
}

std::vector<Check> grid_bound_checks(int n, int points, Exec exec) {
  std::vector<Check> out;
  for (Family f : {Family::Xi, Family::Lambda}) {
    const EvenPolynomial p = build(f, n);
    const Rational sup = grid_sup_abs(p, points, exec);
    Check c = make_check("grid_sup_bound", n, sup <= p.leading().abs());
    c.with_family(f).with_exact(sup);
    c.note = "sup over " + std::to_string(points) + " grid points vs |leading| = " + p.leading().abs().str();
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Check> evenness_checks(int n, int samples) {
  std::mt19937_64 rng(0x5eed0000ULL + static_cast<unsigned long long>(n));
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 997);
  std::vector<Check> out;
  for (Family f : {Family::Xi, Family::Lambda}) {
    const EvenPolynomial p = build(f, n);
    bool ok = true;
    for (int i = 0; i < samples; ++i) {
      const Rational x(BigInt(num(rng)), BigInt(den(rng)));
      if (p.eval(x) != p.eval(-x)) ok = false;
    }
    out.push_back(make_check("evenness", n, ok).with_family(f));
  }
  return out;
}

}  // namespace polyzeta
