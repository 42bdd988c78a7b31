#pragma once

#include <vector>

#include "polyzeta/numeric/bigfloat.hpp"
#include "polyzeta/report/report.hpp"

namespace polyzeta {

// Per-suite defaults for n_max; exceeding them needs --force.
inline constexpr int kStructuralCap = 12;
inline constexpr int kRootsCap = 10;
inline constexpr int kIntegralCap = 6;

// Relative agreement asserted for the quadrature against the references.
inline constexpr double kIntegralRelTol = 1e-10;

// Each runner fans independent (family, n) items out over worker_count()
// threads and assembles its checks in a fixed order.
Suite structural_suite(int n_max);
Suite eulerian_identity_suite(int n_max);
Suite pi_multiple_suite(int n_max);
Suite property_suite(int n_max, int bits);
Suite roots_suite(int n_max);
Suite extremal_suite(int n_max);
Suite reference_suite(int n_max, int bits);
Suite integral_suite(int n_max, int bits);

// |a - b| / |b| <= tol, evaluated in doubles on the BigFloat difference.
bool relative_match(const BigFloat& a, const BigFloat& b, double tol, double* rel_out = nullptr);

}  // namespace polyzeta
