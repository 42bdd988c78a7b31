#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polyzeta/exact/rational.hpp"
#include "polyzeta/poly/upoly.hpp"

namespace polyzeta {

// Xi_n carries the Dirichlet beta values, Lambda_n the odd zeta values.
enum class Family { Xi, Lambda };

// Type-B Eulerian weights feed Xi, type-A weights feed Lambda.
enum class CoeffFamily { A, B };

constexpr CoeffFamily coeff_family(Family f) { return f == Family::Xi ? CoeffFamily::B : CoeffFamily::A; }
std::string_view to_string(Family f);
std::string_view to_string(CoeffFamily f);
Family parse_family(std::string_view text);

// Requests above this n are rejected outright.
inline constexpr int kMaxPolynomialIndex = 64;

// P(sqrt(y)) for an even polynomial P: degree n-1 in y.
struct AdaptedPolynomial {
  Family family;
  int n;
  UPoly poly;
};

// Even polynomial sum_t coeffs[t] x^{2t}, t = 0..n-1, of degree exactly 2n-2.
class EvenPolynomial {
 public:
  EvenPolynomial(Family family, int n, std::vector<Rational> coeffs);

  Family family() const { return family_; }
  int n() const { return n_; }
  int degree() const { return 2 * n_ - 2; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }

  Rational eval(const Rational& x) const;
  AdaptedPolynomial adapted() const;
  // The polynomial in x itself (odd coefficients zero).
  UPoly as_upoly() const;

  friend bool operator==(const EvenPolynomial&, const EvenPolynomial&) = default;

 private:
  Family family_;
  int n_;
  std::vector<Rational> coeffs_;
};

// Integer coefficient vector C_{n,t}, t = 0..n-1, of the explicit expansion.
struct CoeffVector {
  CoeffFamily family;
  int n;
  std::vector<BigInt> values;
};

// E_{n,k}(x) = (1-x^2)^k ((1+x)^{2n-2k-1} - (1-x)^{2n-2k-1}), evaluated directly.
Rational enk_product_eval(int n, int k, const Rational& x);

// c_t = sum_i (-1)^i C(k,i) C(2n-2k-1, 2t-2i+1), t = 0..n-1, so that
// E_{n,k}(x) = 2x sum_t c_t x^{2t}.
std::vector<BigInt> enk_expansion_coeffs(int n, int k);

CoeffVector coeff_vector(CoeffFamily family, int n);

// Explicit route: prefactor times the Eulerian-weighted E_{n,k} expansions.
EvenPolynomial build(Family family, int n);

// Eulerian-polynomial route: (1+x)^{2n-1} P(-(1-x)/(1+x)) / x with
// P = B_{2n-1} (Xi) or A_{2n} (Lambda), expanded exactly. Throws
// InternalError if the division by x leaves a remainder.
EvenPolynomial build_via_moebius(Family family, int n);

// Closed forms through Euler and Bernoulli numbers.
Rational expected_value_at_zero(Family family, int n);
Rational expected_value_at_one(Family family, int n);
Rational expected_leading(Family family, int n);

// Exact ratio r with int_0^1 p(x)/sqrt(1-x^2) dx = r * pi.
Rational sqrt_weight_ratio(const std::vector<Rational>& even_coeffs);

}  // namespace polyzeta
