#include "polyzeta/numbers/identities.hpp"

#include "polyzeta/errors.hpp"
#include "polyzeta/exact/combinatorics.hpp"
#include "polyzeta/numbers/eulerian.hpp"
#include "polyzeta/numbers/signed_numbers.hpp"

namespace polyzeta {

bool worpitzky_b_check(int m, int k) {
  if (m < 0 || k < 0) throw DomainError("worpitzky_b_check needs m, k >= 0");
  const EulerianTableB table(m);
  const auto& row = table.row(m);
  BigInt lhs = 0;
  for (int l = 0; l <= m; ++l) lhs += binom(m + k - l, m) * row[static_cast<std::size_t>(l)];
  BigInt rhs;
  mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(2 * k + 1), static_cast<unsigned long>(m));
  return lhs == rhs;
}

EulerianSumCheck eulerian_sum_identity(int n) {
  if (n < 1) throw DomainError("eulerian_sum_identity needs n >= 1");
  const EulerianTableB tb(2 * n - 1);
  const EulerianTableA ta(2 * n);
  EulerianSumCheck out;
  BigInt sb = 0, sa = 0;
  for (int k = 0; k < n; ++k) {
    const long weight = (k % 2 == 0 ? 1 : -1) * (2L * n - 2L * k - 1);
    sb += tb.at(2 * n - 1, k) * weight;
    sa += ta.at(2 * n, k) * weight;
  }
  out.lhs_b = Rational(sb);
  out.lhs_a = Rational(sa);
  out.rhs_b = -pow2(2 * n - 2) * Rational(euler_number(2 * n));
  out.rhs_a = -pow2(2 * n + 1) * (pow2(2 * n + 2) - 1) * bernoulli(2 * n + 2) / Rational(2 * n + 2);
  out.type_b = out.lhs_b == out.rhs_b;
  out.type_a = out.lhs_a == out.rhs_a;
  return out;
}

PolylogResidual polylog_b_identity_residual(int m, const Rational& z, int precision_bits) {
  if (m < 0) throw DomainError("polylog identity needs m >= 0");
  if (z <= Rational(0) || z >= Rational(1)) throw DomainError("polylog identity needs 0 < z < 1");
  const Rational x = -(z * z);
  const Rational target = pow2(-precision_bits - 2);

  // Closed form.
  const EulerianTableB table(m);
  const auto& row = table.row(m);
  Rational poly = 0;
  for (auto it = row.rbegin(); it != row.rend(); ++it) poly = poly * x + Rational(*it);
  const Rational closed = poly / (Rational(1) + z * z).pow(m + 1);

  // Alternating series; once |a_{k+1}| <= |a_k| holds it keeps holding
  // (the ratio ((2k+3)/(2k+1))^m z^2 decreases in k), so the first omitted
  // term bounds the tail.
  Rational partial = 0;
  Rational term = 1;  // (2k+1)^m x^k at k = 0
  Rational x_power = 1;
  long k = 0;
  const long max_terms = 1L << 20;
  for (;; ++k) {
    partial += term;
    x_power *= x;
    const Rational next = Rational(2 * k + 3).pow(m) * x_power;
    const bool decreasing = next.abs() <= term.abs();
    term = next;
    if (decreasing && term.abs() <= target) break;
    if (k > max_terms) throw InternalError("polylog series did not settle");
  }

  const int work = precision_bits + 32;
  PolylogResidual out{BigFloat((partial - closed).abs(), work), BigFloat(term.abs(), work), closed, k + 1};
  return out;
}

}  // namespace polyzeta
