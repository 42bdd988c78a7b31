#pragma once

#include <vector>

#include "polyzeta/exact/rational.hpp"
#include "polyzeta/poly/even_polynomial.hpp"
#include "polyzeta/report/report.hpp"

namespace polyzeta {

// int_0^1 p(x) / sqrt(1 - x^2) dx = ratio * pi, exactly.
struct PiMultiple {
  Rational ratio;
};

PiMultiple sqrt_weight_integral_exact(const EvenPolynomial& p);
// Same for raw even coefficients a_t of x^{2t}.
PiMultiple sqrt_weight_integral_exact(const std::vector<Rational>& even_coeffs);

// Positivity for n = 1..n_max and strict decrease across n, both families.
std::vector<Check> pi_ratio_suite(int n_max);

}  // namespace polyzeta
