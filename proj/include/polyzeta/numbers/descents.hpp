#pragma once

#include <vector>

#include "polyzeta/exact/rational.hpp"

namespace polyzeta {

// Enumeration-based Eulerian rows, independent of the recurrences.
// Type A: descents i in [1, m-1] with w(i) > w(i+1) over all m! permutations.
std::vector<BigInt> descent_counts_a(int m);
// Type B: descents i in [0, m-1] with w(i) > w(i+1), w(0) := 0, over all
// 2^m m! signed permutations.
std::vector<BigInt> descent_counts_b(int m);

}  // namespace polyzeta
