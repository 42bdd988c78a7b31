#pragma once

#include "polyzeta/numeric/bigfloat.hpp"

namespace polyzeta {

// Reference values with absolute error <= 2^-bits. Each constant has two
// independent algorithms so the references can vouch for one another.

// zeta(s), s odd >= 3: direct sum to N plus the Euler-Maclaurin tail, whose
// leading term is the integral bound N^{1-s}/(s-1); N and the number of
// correction terms are chosen from the first omitted term.
BigFloat zeta_ref(int s, int bits);
// zeta(s) = eta(s) / (1 - 2^{1-s}) with eta summed by Cohen-Villegas-Zagier
// acceleration.
BigFloat zeta_ref_alternating(int s, int bits);

// beta(s), s even >= 2: Cohen-Villegas-Zagier acceleration of
// sum (-1)^m (2m+1)^{-s}, error <= 2 (3+sqrt 8)^{-terms}.
BigFloat beta_ref(int s, int bits);
// beta(s) = 4^{-s} (zeta(s, 1/4) - zeta(s, 3/4)) with Euler-Maclaurin
// Hurwitz zeta values.
BigFloat beta_ref_hurwitz(int s, int bits);

// sum_{m < terms} (-1)^m (2m+1)^{-s}; consecutive sums bracket beta(s).
BigFloat beta_partial_sum(int s, long terms, int bits);

}  // namespace polyzeta
