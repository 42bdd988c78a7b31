#pragma once

#include <vector>

#include "polyzeta/exec.hpp"
#include "polyzeta/poly/even_polynomial.hpp"
#include "polyzeta/report/report.hpp"

namespace polyzeta {

// max_j |p(j/(points+1))|, j = 1..points, computed exactly.
Rational grid_sup_abs(const EvenPolynomial& p, int points, Exec exec = Exec::Parallel);

// Exact structural facts for both families at index n: cross-construction
// equality, leading coefficient, values at 0 and 1, coefficient sum,
// coefficient sign alternation, log-concavity of |C_{n,t}| and the sign of
// (-1)^{n+1} p(x) at a few rationals x > 1.
std::vector<Check> structural_checks(int n);

// sup over a grid in (0,1) of |p| against |leading coefficient|.
std::vector<Check> grid_bound_checks(int n, int points = 1024, Exec exec = Exec::Parallel);

// p(x) == p(-x) at pseudo-random rationals (fixed seed).
std::vector<Check> evenness_checks(int n, int samples = 16);

}  // namespace polyzeta
