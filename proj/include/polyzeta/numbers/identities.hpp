#pragma once

#include "polyzeta/exact/rational.hpp"
#include "polyzeta/numeric/bigfloat.hpp"

namespace polyzeta {

// sum_{l=0}^{m} C(m+k-l, m) <m,l>^B == (2k+1)^m, exactly.
bool worpitzky_b_check(int m, int k);

// Both alternating Eulerian sums that fix the constant terms:
//   sum_{k<n} <2n-1,k>^B (-1)^k (2n-2k-1) = -2^{2n-2} E_{2n}
//   sum_{k<n} <2n,k>     (-1)^k (2n-2k-1) = -2^{2n+1}(2^{2n+2}-1) B_{2n+2}/(2n+2)
struct EulerianSumCheck {
  bool type_b = false;
  bool type_a = false;
  Rational lhs_b, rhs_b, lhs_a, rhs_a;
};
EulerianSumCheck eulerian_sum_identity(int n);

// Numerical check of Im(Li_{-m}(iz))/z = (1+z^2)^{-(m+1)} sum_r <m,r>^B (-z^2)^r.
// The left side is the alternating series sum_k (2k+1)^m (-z^2)^k, truncated
// where its terms are monotonically decreasing and below the requested
// precision; the partial sum and the closed form are both exact rationals.
struct PolylogResidual {
  BigFloat residual;    // |partial sum - closed form|
  BigFloat tail_bound;  // |first omitted term|, bounds the truncation error
  Rational closed_form;
  long terms = 0;
};
PolylogResidual polylog_b_identity_residual(int m, const Rational& z, int precision_bits);

}  // namespace polyzeta
