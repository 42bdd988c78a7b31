#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library's number or polynomial code; only the Rational/BigInt types
// are shared.

#include <string>
#include <vector>

#include "polyzeta/exact/rational.hpp"

namespace oracle {

using polyzeta::BigInt;
using polyzeta::Rational;

// Pascal's triangle rows 0..n.
inline std::vector<std::vector<BigInt>> pascal(int n) {
  std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(n + 1));
  for (int r = 0; r <= n; ++r) {
    auto& row = rows[static_cast<std::size_t>(r)];
    row.assign(static_cast<std::size_t>(r + 1), BigInt(1));
    for (int k = 1; k < r; ++k) row[k] = rows[r - 1][k - 1] + rows[r - 1][k];
  }
  return rows;
}

inline BigInt choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline BigInt fact(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt ipow(long b, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Akiyama-Tanigawa; yields B_1 = +1/2, flipped to -1/2 here.
inline std::vector<Rational> bernoulli(int n_max) {
  std::vector<Rational> out, a(static_cast<std::size_t>(n_max + 1));
  for (int m = 0; m <= n_max; ++m) {
    a[m] = Rational(BigInt(1), BigInt(m + 1));
    for (int j = m; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
    out.push_back(a[0]);
  }
  if (n_max >= 1) out[1] = Rational(-1, 2);
  return out;
}

// Seidel boustrophedon for the zigzag numbers; E_{2n} = (-1)^n zigzag(2n).
inline std::vector<BigInt> euler_even(int n_max) {
  const int top = 2 * n_max;
  std::vector<BigInt> zig{1};
  std::vector<BigInt> row{1};
  for (int m = 1; m <= top; ++m) {
    std::vector<BigInt> next(static_cast<std::size_t>(m + 1));
    next[0] = 0;
    for (int k = 1; k <= m; ++k) next[k] = next[k - 1] + row[static_cast<std::size_t>(m - k)];
    zig.push_back(next[m]);
    row = next;
  }
  std::vector<BigInt> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(n % 2 == 0 ? zig[2 * n] : BigInt(-zig[2 * n]));
  return out;
}

// Closed sums for the Eulerian numbers.
inline BigInt eulerian_a(int m, int k) {
  BigInt s = 0;
  for (int j = 0; j <= k + 1; ++j) {
    const BigInt t = choose(m + 1, j) * ipow(k + 1 - j, m);
    s += j % 2 == 0 ? t : BigInt(-t);
  }
  return s;
}

inline BigInt eulerian_b(int m, int k) {
  BigInt s = 0;
  for (int j = 0; j <= k; ++j) {
    const BigInt t = choose(m + 1, k - j) * ipow(2 * j + 1, m);
    s += (k - j) % 2 == 0 ? t : BigInt(-t);
  }
  return s;
}

inline Rational rpow(const Rational& x, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

// Xi_n(x) (type_b) or Lambda_n(x) at x != 0 straight from the product form
// prefactor * sum_k w_k (-1)^k (1-x^2)^k ((1+x)^{2n-2k-1} - (1-x)^{2n-2k-1}) / (2x).
inline Rational family_value(bool type_b, int n, const Rational& x) {
  Rational s = 0;
  for (int k = 0; k < n; ++k) {
    const BigInt w = type_b ? eulerian_b(2 * n - 1, k) : eulerian_a(2 * n, k);
    const int e = 2 * n - 2 * k - 1;
    Rational term = Rational(w) * rpow(Rational(1) - x * x, k) * (rpow(Rational(1) + x, e) - rpow(Rational(1) - x, e));
    s += k % 2 == 0 ? term : -term;
  }
  s /= Rational(2) * x;
  const Rational sign = n % 2 == 1 ? Rational(1) : Rational(-1);
  if (type_b) return sign * s / (Rational(ipow(2, 4 * n - 2)) * Rational(fact(2 * n - 1)));
  return Rational(2) * sign * s / (Rational(BigInt(ipow(2, 2 * n + 1) - 1)) * Rational(fact(2 * n)));
}

// Values computed offline with mpmath at 60 digits.
inline const std::vector<std::string>& beta_over_pi() {
  // beta(2n) / pi^{2n-1}, n = 1..6
  static const std::vector<std::string> v{
      "0.29156090403081878014", "0.031894979263003292591", "0.0032634672600201032258",
      "0.00033104401289632706683", "0.000033546238778982573103", "3.3989954632072143358e-6"};
  return v;
}

inline const std::vector<std::string>& zeta_over_pi() {
  // zeta(2n+1) / pi^{2n}, n = 1..6
  static const std::vector<std::string> v{
      "0.12179382823357308312", "0.010645081933691499041", "0.0010488460699583888801",
      "0.0001056020569600285379", "0.000010683556310767054239", "1.0820686585039901764e-6"};
  return v;
}

}  // namespace oracle
