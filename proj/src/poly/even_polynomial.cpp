#include "polyzeta/poly/even_polynomial.hpp"

#include <cctype>
#include <string>

#include "polyzeta/errors.hpp"
#include "polyzeta/exact/combinatorics.hpp"
#include "polyzeta/numbers/eulerian.hpp"
#include "polyzeta/numbers/signed_numbers.hpp"

namespace polyzeta {
namespace {

void check_index(int n) {
  if (n < 1 || n > kMaxPolynomialIndex) {
    throw DomainError("polynomial index n=" + std::to_string(n) + " outside [1, " +
                      std::to_string(kMaxPolynomialIndex) + "]");
  }
}

int sign_pow(int e) { return e % 2 == 0 ? 1 : -1; }

// Weights <2n-1,k>^B (Xi) or <2n,k> (Lambda), k = 0..2n-1.
std::vector<BigInt> eulerian_weights(CoeffFamily family, int n) {
  if (family == CoeffFamily::B) return EulerianTableB(2 * n - 1).row(2 * n - 1);
  return EulerianTableA(2 * n).row(2 * n);
}

Rational prefactor(Family family, int n) {
  const int s = sign_pow(n + 1);
  if (family == Family::Xi) return Rational(s) / (pow2(4 * n - 2) * Rational(factorial(2 * n - 1)));
  return Rational(2 * s) / ((pow2(2 * n + 1) - 1) * Rational(factorial(2 * n)));
}

}  // namespace

std::string_view to_string(Family f) { return f == Family::Xi ? "xi" : "lambda"; }

std::string_view to_string(CoeffFamily f) { return f == CoeffFamily::A ? "A" : "B"; }

Family parse_family(std::string_view text) {
  std::string s(text);
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (s == "xi" || s == "b") return Family::Xi;
  if (s == "lambda" || s == "a") return Family::Lambda;
  throw DomainError("unknown family: " + std::string(text));
}

EvenPolynomial::EvenPolynomial(Family family, int n, std::vector<Rational> coeffs)
    : family_(family), n_(n), coeffs_(std::move(coeffs)) {
  check_index(n);
  if (static_cast<int>(coeffs_.size()) != n) throw DomainError("even polynomial needs exactly n coefficients");
  if (coeffs_.back().is_zero()) throw DomainError("even polynomial degree below 2n-2");
}

Rational EvenPolynomial::eval(const Rational& x) const {
  const Rational y = x * x;
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * y + *it;
  return acc;
}

AdaptedPolynomial EvenPolynomial::adapted() const { return {family_, n_, UPoly(coeffs_)}; }

UPoly EvenPolynomial::as_upoly() const {
  std::vector<Rational> v(static_cast<std::size_t>(degree()) + 1);
  for (std::size_t t = 0; t < coeffs_.size(); ++t) v[2 * t] = coeffs_[t];
  return UPoly(std::move(v));
}

Rational enk_product_eval(int n, int k, const Rational& x) {
  if (n < 1 || k < 0 || k > n - 1) throw DomainError("E_{n,k} needs 0 <= k <= n-1");
  const int m = 2 * n - 2 * k - 1;
  return (Rational(1) - x * x).pow(k) * ((Rational(1) + x).pow(m) - (Rational(1) - x).pow(m));
}

std::vector<BigInt> enk_expansion_coeffs(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1) throw DomainError("E_{n,k} needs 0 <= k <= n-1");
  const long m = 2L * n - 2L * k - 1;
  std::vector<BigInt> c(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) {
    BigInt acc = 0;
    for (int i = 0; i <= k; ++i) {
      const BigInt term = binom(k, i) * binom(m, 2L * t - 2L * i + 1);
      if (i % 2 == 0) acc += term; else acc -= term;
    }
    c[static_cast<std::size_t>(t)] = acc;
  }
  return c;
}

CoeffVector coeff_vector(CoeffFamily family, int n) {
  check_index(n);
  const auto weights = eulerian_weights(family, n);
  CoeffVector out{family, n, std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(0))};
  for (int k = 0; k < n; ++k) {
    const auto inner = enk_expansion_coeffs(n, k);
    const BigInt& w = weights[static_cast<std::size_t>(k)];
    for (int t = 0; t < n; ++t) {
      if (k % 2 == 0) out.values[static_cast<std::size_t>(t)] += w * inner[static_cast<std::size_t>(t)];
      else out.values[static_cast<std::size_t>(t)] -= w * inner[static_cast<std::size_t>(t)];
    }
  }
  return out;
}

EvenPolynomial build(Family family, int n) {
  check_index(n);
  const CoeffVector cv = coeff_vector(coeff_family(family), n);
  const Rational pre = prefactor(family, n);
  std::vector<Rational> coeffs;
  coeffs.reserve(cv.values.size());
  for (const auto& v : cv.values) coeffs.push_back(pre * Rational(v));
  return EvenPolynomial(family, n, std::move(coeffs));
}

EvenPolynomial build_via_moebius(Family family, int n) {
  check_index(n);
  const auto weights = eulerian_weights(coeff_family(family), n);
  const int top = 2 * n - 1;
  // N(x) = (1+x)^{2n-1} P(-(1-x)/(1+x)) = sum_k p_k (-1)^k (1-x)^k (1+x)^{2n-1-k}
  UPoly numerator;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    const int kk = static_cast<int>(k);
    UPoly term = UPoly::binomial_power(1, -1, kk) * UPoly::binomial_power(1, 1, top - kk);
    numerator += term * Rational(BigInt(weights[k] * sign_pow(kk)));
  }
  const auto [quotient, remainder] = divmod(numerator, UPoly{0, 1});
  if (!remainder.is_zero()) throw InternalError("Eulerian-polynomial form not divisible by x");

  // The explicit route's prefactor carries the 2x of E_{n,k}; this one does not.
  const Rational pre = prefactor(family, n) / Rational(2);
  std::vector<Rational> coeffs(static_cast<std::size_t>(n));
  for (int d = 0; d <= quotient.degree(); ++d) {
    const Rational c = quotient.coeff(d) * pre;
    if (d % 2 == 1) {
      if (!c.is_zero()) throw InternalError("Eulerian-polynomial form is not even");
      continue;
    }
    if (d / 2 >= n) throw InternalError("Eulerian-polynomial form exceeds degree 2n-2");
    coeffs[static_cast<std::size_t>(d / 2)] = c;
  }
  return EvenPolynomial(family, n, std::move(coeffs));
}

Rational expected_value_at_zero(Family family, int n) {
  check_index(n);
  const int s = sign_pow(n);
  if (family == Family::Xi) {
    return Rational(s) * Rational(euler_number(2 * n)) / (pow2(2 * n) * Rational(factorial(2 * n - 1)));
  }
  return Rational(s) * pow2(2 * n + 2) * (pow2(2 * n + 2) - 1) * bernoulli(2 * n + 2) /
         ((pow2(2 * n + 1) - 1) * Rational(2 * n + 2) * Rational(factorial(2 * n)));
}

Rational expected_value_at_one(Family family, int n) {
  check_index(n);
  const int s = sign_pow(n + 1);
  if (family == Family::Xi) return Rational(s) / (pow2(2 * n) * Rational(factorial(2 * n - 1)));
  return Rational(s) * pow2(2 * n - 1) / ((pow2(2 * n + 1) - 1) * Rational(factorial(2 * n)));
}

Rational expected_leading(Family family, int n) {
  check_index(n);
  const int s = sign_pow(n + 1);
  if (family == Family::Xi) return Rational(s) / pow2(2 * n);
  return Rational(s) / (pow2(2 * n + 1) - 1);
}

Rational sqrt_weight_ratio(const std::vector<Rational>& even_coeffs) {
  // int_0^1 x^{2t}/sqrt(1-x^2) dx = (pi/2) (2t-1)!!/(2t)!!
  Rational ratio = 0;
  for (std::size_t t = 0; t < even_coeffs.size(); ++t) {
    const long tt = static_cast<long>(t);
    ratio += even_coeffs[t] * Rational(double_factorial(2 * tt - 1), double_factorial(2 * tt)) / Rational(2);
  }
  return ratio;
}

}  // namespace polyzeta
