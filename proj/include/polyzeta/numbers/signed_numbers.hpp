#pragma once

#include <vector>

#include "polyzeta/exact/rational.hpp"

namespace polyzeta {

// Bernoulli numbers from sum_{k=0}^{m} C(m+1,k) B_k = 0, B_0 = 1 (so B_1 = -1/2).
Rational bernoulli(int n);
std::vector<Rational> bernoulli_table(int n_max);

// Euler (secant) numbers: sec x = sum (-1)^k E_{2k} x^{2k}/(2k)!, so
// E_0 = 1, E_2 = -1, E_4 = 5; odd indices are 0.
BigInt euler_number(int n);
std::vector<BigInt> euler_table(int n_max);

}  // namespace polyzeta
