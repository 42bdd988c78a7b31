#include "polyzeta/roots/extremal.hpp"

#include <algorithm>

#include "polyzeta/errors.hpp"
#include "polyzeta/roots/sturm.hpp"

namespace polyzeta {
namespace {

// Refines both reports' intervals until r_a < r_b or r_b < r_a is decided.
bool root_less(RootReport& ra, std::size_t ia, RootReport& rb, std::size_t ib) {
  IsolatingInterval& a = ra.intervals[ia];
  IsolatingInterval& b = rb.intervals[ib];
  while (true) {
    if (a.hi <= b.lo) return true;
    if (b.hi <= a.lo) return false;
    const Rational target = std::max(a.width(), b.width()) / Rational(2);
    if (target < max_interlacing_refinement()) throw RefinementExhausted();
    refine_interval(ra.squarefree, a, target);
    refine_interval(rb.squarefree, b, target);
  }
}

std::string decimal(const Rational& q) { return BigFloat(q, 96).to_decimal(20); }

}  // namespace

Rational endpoint_ratio_power(const UPoly& p, const Rational& a) {
  if (p.degree() < 1) throw DomainError("endpoint bound needs deg p >= 1");
  const Rational v = p.eval(a);
  if (v.is_zero()) throw DomainError("endpoint is a root");
  return (v / p.lc()).abs();
}

BigFloat endpoint_ratio_bound(const UPoly& p, const Rational& a, Side, int bits) {
  const Rational r = endpoint_ratio_power(p, a);
  const int work = bits + 32;
  return root(BigFloat(r, work), static_cast<unsigned long>(p.degree())).with_precision(bits);
}

BigFloat endpoint_ratio_bound(const AdaptedPolynomial& p, const Rational& a, Side side, int bits) {
  return endpoint_ratio_bound(p.poly, a, side, bits);
}

bool endpoint_bound_holds(const UPoly& p, const IsolatingInterval& extremal, const Rational& a, Side side) {
  const Rational ratio = endpoint_ratio_power(p, a);
  const int d = p.degree();
  auto within = [&](const Rational& gap) { return gap.sign() <= 0 || gap.pow(d) <= ratio; };
  // With a single distinct root the bound holds with equality, so solve for
  // that root exactly instead of refining forever.
  const UPoly sqf = SturmChain(p).squarefree() ? p : divmod(p, gcd(p, p.derivative())).first;
  if (sqf.degree() == 1) {
    const Rational r = -sqf.coeff(0) / sqf.coeff(1);
    return within(side == Side::Right ? a - r : r - a);
  }
  IsolatingInterval iv = extremal;
  while (true) {
    // Largest and smallest possible distance from a to the root.
    const Rational far = side == Side::Right ? a - iv.lo : iv.hi - a;
    const Rational near = side == Side::Right ? a - iv.hi : iv.lo - a;
    if (within(far)) return true;
    if (!within(near)) return false;
    if (iv.width() < max_interlacing_refinement()) throw RefinementExhausted();
    refine_interval(sqf, iv, iv.width() / Rational(2));
  }
}

std::vector<Check> extremal_zero_checks(int n_max, int bound_n_max) {
  if (n_max < 3) throw DomainError("extremal_zero_checks needs n_max >= 3");
  std::vector<Check> out;
  for (Family f : {Family::Xi, Family::Lambda}) {
    std::vector<RootReport> reports;
    for (int n = 2; n <= n_max; ++n) {
      const EvenPolynomial p = build(f, n);
      reports.push_back(isolate_all(p.adapted()));
      RootReport& r = reports.back();
      const bool ok = r.all_real && largest_root_bound_holds(r.poly, r.intervals.back());
      Check c = make_check("endpoint_bound_at_one", n, ok);
      c.with_family(f);
      c.numeric_value = endpoint_ratio_bound(r.poly, 1, Side::Right, 96).to_decimal(20);
      c.data = nlohmann::ordered_json{{"one_minus_largest_root_upper", decimal(Rational(1) - r.intervals.back().lo)}};
      out.push_back(std::move(c));
    }

    // x_n = R_n^{1/(n-1)} with R_n = |p(1)/lc|; x_{n+1} < x_n iff R_{n+1}^{n-1} < R_n^n.
    int first_bad = 0;
    Rational prev_ratio;
    for (int n = 2; n <= bound_n_max; ++n) {
      const Rational ratio = endpoint_ratio_power(build(f, n).adapted().poly, 1);
      if (n > 2 && !(ratio.pow(n - 2) < prev_ratio.pow(n - 1)) && first_bad == 0) first_bad = n;
      prev_ratio = ratio;
    }
    Check dec = make_check("endpoint_bound_decreasing", std::nullopt, first_bad == 0);
    dec.with_family(f);
    dec.note = "n = 2.." + std::to_string(bound_n_max) +
               (first_bad ? ", first increase at n = " + std::to_string(first_bad) : std::string());
    out.push_back(std::move(dec));

    bool small_dec = true, large_inc = true;
    nlohmann::ordered_json smallest = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
      smallest.push_back(decimal(reports[i].intervals.front().lo));
      if (i + 1 == reports.size()) break;
      if (!root_less(reports[i + 1], 0, reports[i], 0)) small_dec = false;
      if (!root_less(reports[i], reports[i].intervals.size() - 1, reports[i + 1], reports[i + 1].intervals.size() - 1))
        large_inc = false;
    }
    Check lg = make_check("largest_zero_increasing", std::nullopt, large_inc);
    lg.with_family(f).note = "n = 2.." + std::to_string(n_max);
    out.push_back(std::move(lg));
    if (f == Family::Lambda) {
      Check sm = make_check("smallest_zero_decreasing", std::nullopt, small_dec);
      sm.with_family(f).note = "n = 2.." + std::to_string(n_max);
      sm.data = nlohmann::ordered_json{{"smallest_zeros", smallest}};
      out.push_back(std::move(sm));
    } else {
      Check sm = make_info("smallest_zero_trend", std::nullopt);
      sm.with_family(f).note = std::string("open conjecture, trend only: ") + (small_dec ? "decreasing" : "not monotone") +
                               " over n = 2.." + std::to_string(n_max);
      sm.data = nlohmann::ordered_json{{"smallest_zeros", smallest}};
      out.push_back(std::move(sm));
    }
  }
  return out;
}

}  // namespace polyzeta
