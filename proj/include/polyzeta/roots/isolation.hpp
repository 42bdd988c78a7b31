#pragma once

#include <vector>

#include "polyzeta/exact/rational.hpp"
#include "polyzeta/poly/even_polynomial.hpp"
#include "polyzeta/poly/upoly.hpp"

namespace polyzeta {

// Exactly one root in (lo, hi]; neither endpoint is a root.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  int sign_change_count_delta = 1;

  Rational width() const { return hi - lo; }
};

struct RootReport {
  Family family;
  int n;
  UPoly poly;        // the adapted polynomial
  UPoly squarefree;  // poly / gcd(poly, poly'), used for refinement
  std::vector<IsolatingInterval> intervals;  // sorted, pairwise disjoint
  bool all_real = false;
  bool all_simple = false;
  bool all_in_unit = false;
  bool largest_root_bound_ok = false;
};

Rational default_isolation_width();     // 2^-80
Rational max_interlacing_refinement();  // 2^-512

// 1 + max |a_i / lc|: every real root lies in (-bound, bound).
Rational cauchy_bound(const UPoly& p);

// Isolating intervals for the distinct real roots of p, each of length <= width.
std::vector<IsolatingInterval> isolate_roots(const UPoly& p, const Rational& width);

// Halve by sign until the interval is no wider than width. sqf must be
// squarefree with exactly one root in the interval.
void refine_interval(const UPoly& sqf, IsolatingInterval& iv, const Rational& width);

RootReport isolate_all(const AdaptedPolynomial& p, const Rational& width = default_isolation_width());

// Strict interlacing q_1 < p_1 < q_2 < ... < p_{m} < q_{m+1} of the roots of
// p (index n) with those of q (index n+1). Refines both reports as needed
// down to max_interlacing_refinement(), then throws RefinementExhausted.
bool check_interlacing(RootReport& p, RootReport& q);

}  // namespace polyzeta
