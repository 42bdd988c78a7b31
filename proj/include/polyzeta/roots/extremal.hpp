#pragma once

#include <vector>

#include "polyzeta/numeric/bigfloat.hpp"
#include "polyzeta/poly/even_polynomial.hpp"
#include "polyzeta/report/report.hpp"
#include "polyzeta/roots/isolation.hpp"

namespace polyzeta {

// Right: a lies right of every root and the value bounds a - r_max.
// Left: a lies left of every root and the value bounds r_min - a.
enum class Side { Left, Right };

// |p(a)/lc(p)| exactly; DomainError if deg p < 1 or p(a) = 0.
Rational endpoint_ratio_power(const UPoly& p, const Rational& a);

// |p(a)/lc(p)|^{1/deg p}. The magnitude does not depend on side; side only
// fixes which extremal root it bounds.
BigFloat endpoint_ratio_bound(const UPoly& p, const Rational& a, Side side, int bits);
BigFloat endpoint_ratio_bound(const AdaptedPolynomial& p, const Rational& a, Side side, int bits);

// Exact decision of |a - r| <= |p(a)/lc|^{1/deg p} for the extremal root r
// isolated by the interval: a linear p is solved outright, otherwise the
// interval is refined (locally) until both of its ends agree.
bool endpoint_bound_holds(const UPoly& p, const IsolatingInterval& extremal, const Rational& a, Side side);
inline bool largest_root_bound_holds(const UPoly& p, const IsolatingInterval& largest) {
  return endpoint_bound_holds(p, largest, Rational(1), Side::Right);
}

// (a) endpoint bound at a = 1 for n = 2..n_max, both families;
// (b) strict decrease of that bound for n = 2..bound_n_max, exactly;
// (c) smallest zeros of adapted Lambda decreasing and largest zeros of both
//     families increasing over n = 2..n_max; the smallest-zero trend of
//     adapted Xi is reported as info only.
std::vector<Check> extremal_zero_checks(int n_max, int bound_n_max = 30);

}  // namespace polyzeta
