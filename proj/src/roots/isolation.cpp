#include "polyzeta/roots/isolation.hpp"

#include <algorithm>

#include "polyzeta/errors.hpp"
#include "polyzeta/roots/extremal.hpp"
#include "polyzeta/roots/sturm.hpp"

namespace polyzeta {
namespace {

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p;
  return divmod(p, gcd(p, p.derivative())).first;
}

// Nudge a bisection point off a root; the interval is wide compared to the
// shift in every case where this can trigger.
Rational off_root(const UPoly& p, Rational x) {
  for (int i = 0; p.sign_at(x) == 0; ++i) {
    if (i == kMaxEndpointShifts) throw DomainError("endpoint-root: retries exhausted");
    x += endpoint_shift_step();
  }
  return x;
}

void split(const SturmChain& chain, const Rational& lo, const Rational& hi, int count,
           std::vector<IsolatingInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi, 1});
    return;
  }
  const Rational mid = off_root(chain.target(), (lo + hi) / Rational(2));
  const int left = chain.variations_at(lo) - chain.variations_at(mid);
  split(chain, lo, mid, left, out);
  split(chain, mid, hi, count - left, out);
}

}  // namespace

Rational default_isolation_width() { return pow2(-80); }
Rational max_interlacing_refinement() { return pow2(-512); }

Rational cauchy_bound(const UPoly& p) {
  Rational m = 0;
  const Rational lc = p.lc();
  for (int i = 0; i < p.degree(); ++i) {
    const Rational r = (p.coeff(i) / lc).abs();
    if (r > m) m = r;
  }
  return m + Rational(1);
}

std::vector<IsolatingInterval> isolate_roots(const UPoly& p, const Rational& width) {
  if (!(width > Rational(0))) throw DomainError("isolation width must be positive");
  std::vector<IsolatingInterval> out;
  if (p.degree() <= 0) return out;
  const UPoly sqf = squarefree_part(p);
  const SturmChain chain(sqf);
  const Rational b = cauchy_bound(sqf);
  split(chain, -b, b, chain.variations_at(-b) - chain.variations_at(b), out);
  for (auto& iv : out) refine_interval(sqf, iv, width);
  return out;
}

void refine_interval(const UPoly& sqf, IsolatingInterval& iv, const Rational& width) {
  const int s_lo = sqf.sign_at(iv.lo);
  while (iv.width() > width) {
    const Rational mid = (iv.lo + iv.hi) / Rational(2);
    const int s = sqf.sign_at(mid);
    if (s == 0) {
      // Landed on the root: centre a quarter-width interval on it.
      const Rational d = iv.width() / Rational(4);
      iv.lo = mid - d;
      iv.hi = mid + d;
    } else if (s == s_lo) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
}

RootReport isolate_all(const AdaptedPolynomial& p, const Rational& width) {
  RootReport r{p.family, p.n, p.poly, squarefree_part(p.poly), {}, false, false, false, false};
  const int d = p.poly.degree();
  r.intervals = isolate_roots(p.poly, width);
  if (d <= 0) {
    r.all_real = r.all_simple = r.all_in_unit = r.largest_root_bound_ok = true;
    return r;
  }
  const SturmChain chain(p.poly);
  r.all_simple = chain.squarefree();
  r.all_real = r.all_simple && sturm_count_real(chain) == d;
  r.all_in_unit = p.poly.sign_at(0) != 0 && p.poly.sign_at(1) != 0 && sturm_count(chain, 0, 1) == d;
  try {
    r.largest_root_bound_ok = p.poly.sign_at(1) != 0 && !r.intervals.empty() &&
                              largest_root_bound_holds(p.poly, r.intervals.back());
  } catch (const RefinementExhausted&) {
    r.largest_root_bound_ok = false;
  }
  return r;
}

bool check_interlacing(RootReport& p, RootReport& q) {
  if (p.intervals.size() + 1 != q.intervals.size()) return false;
  const Rational floor_width = max_interlacing_refinement();
  const std::size_t m = p.intervals.size();
  // Expected order q_0 < p_0 < q_1 < ... < p_{m-1} < q_m.
  auto at = [&](std::size_t k) -> std::pair<IsolatingInterval*, const UPoly*> {
    return k % 2 == 0 ? std::pair{&q.intervals[k / 2], &q.squarefree} : std::pair{&p.intervals[k / 2], &p.squarefree};
  };
  for (std::size_t k = 0; k + 1 < 2 * m + 1; ++k) {
    while (true) {
      auto [a, pa] = at(k);
      auto [b, pb] = at(k + 1);
      if (a->hi <= b->lo) break;
      if (b->hi <= a->lo) return false;
      const Rational target = std::max(a->width(), b->width()) / Rational(2);
      if (target < floor_width) throw RefinementExhausted();
      refine_interval(*pa, *a, target);
      refine_interval(*pb, *b, target);
    }
  }
  return true;
}

}  // namespace polyzeta
