#include "polyzeta/cli/suites.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "polyzeta/exec.hpp"
#include "polyzeta/numbers/descents.hpp"
#include "polyzeta/numbers/eulerian.hpp"
#include "polyzeta/numbers/identities.hpp"
#include "polyzeta/poly/structural.hpp"
#include "polyzeta/quad/integrals.hpp"
#include "polyzeta/quad/pi_multiple.hpp"
#include "polyzeta/quad/references.hpp"
#include "polyzeta/roots/extremal.hpp"
#include "polyzeta/roots/isolation.hpp"
#include "polyzeta/roots/sturm.hpp"

namespace polyzeta {
namespace {

// Runs items[i]() on the worker pool; output order follows the item order.
std::vector<Check> fan_out(const std::vector<std::function<std::vector<Check>()>>& items) {
  std::vector<std::vector<Check>> parts(items.size());
  const long count = static_cast<long>(items.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
  for (long i = 0; i < count; ++i) parts[static_cast<std::size_t>(i)] = items[static_cast<std::size_t>(i)]();
  std::vector<Check> out;
  for (auto& p : parts)
    for (auto& c : p) out.push_back(std::move(c));
  return out;
}

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

nlohmann::ordered_json intervals_json(const std::vector<IsolatingInterval>& ivs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& iv : ivs) {
    arr.push_back({{"lo", iv.lo.str()},
                   {"hi", iv.hi.str()},
                   {"preview", BigFloat(iv.lo, 96).to_decimal(20)}});
  }
  return arr;
}

}  // namespace

bool relative_match(const BigFloat& a, const BigFloat& b, double tol, double* rel_out) {
  const double rel = (abs(a - b) / abs(b)).to_double();
  if (rel_out) *rel_out = rel;
  return rel <= tol;
}

Suite structural_suite(int n_max) {
  std::vector<std::function<std::vector<Check>()>> items;
  for (int n = 1; n <= n_max; ++n) items.emplace_back([n] { return structural_checks(n); });
  return {"structural", fan_out(items)};
}

Suite eulerian_identity_suite(int n_max) {
  Suite s{"eulerian_identities", {}};
  for (int m = 1; m <= 10; ++m) {
    bool ok = true;
    for (int k = 0; k <= 20; ++k) ok = ok && worpitzky_b_check(m, k);
    Check c = make_check("worpitzky_type_b", m, ok);
    c.note = "k = 0..20";
    s.checks.push_back(std::move(c));
  }
  for (int n = 1; n <= n_max; ++n) {
    const EulerianSumCheck e = eulerian_sum_identity(n);
    s.checks.push_back(make_check("eulerian_sum_type_b", n, e.type_b).with_exact(e.lhs_b));
    s.checks.push_back(make_check("eulerian_sum_type_a", n, e.type_a).with_exact(e.lhs_a));
  }
  const EulerianTableA ta(7);
  for (int m = 1; m <= 7; ++m) s.checks.push_back(make_check("descent_count_type_a", m, descent_counts_a(m) == ta.row(m)));
  const EulerianTableB tb(5);
  for (int m = 1; m <= 5; ++m) s.checks.push_back(make_check("descent_count_type_b", m, descent_counts_b(m) == tb.row(m)));
  return s;
}

Suite pi_multiple_suite(int n_max) { return {"pi_multiple", pi_ratio_suite(n_max)}; }

Suite property_suite(int n_max, int bits) {
  std::vector<std::function<std::vector<Check>()>> items;
  for (int n = 1; n <= n_max; ++n) {
    items.emplace_back([n] {
      auto out = grid_bound_checks(n, 1024, Exec::Serial);
      for (auto& c : evenness_checks(n)) out.push_back(std::move(c));
      return out;
    });
  }
  for (int m = 0; m <= 8; ++m) {
    items.emplace_back([m, bits] {
      std::vector<Check> out;
      for (const Rational& z : {Rational(1, 3), Rational(1, 2)}) {
        const PolylogResidual r = polylog_b_identity_residual(m, z, bits);
        const BigFloat tol(pow2(-bits), bits);
        const bool ok = r.residual <= tol && r.residual <= r.tail_bound * BigFloat(2, bits);
        Check c = make_check("polylog_type_b_identity", m, ok);
        c.numeric_value = r.residual.to_decimal(6);
        c.error_estimate = r.tail_bound.to_decimal(6);
        c.note = "z = " + z.str() + ", " + std::to_string(r.terms) + " terms";
        out.push_back(std::move(c));
      }
      return out;
    });
  }
  return {"properties", fan_out(items)};
}

Suite roots_suite(int n_max) {
  std::vector<RootReport> reports[2];
  for (auto& r : reports) r.resize(static_cast<std::size_t>(std::max(0, n_max - 1)));
  const long count = 2L * std::max(0, n_max - 1);
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
  for (long i = 0; i < count; ++i) {
    const int fam = static_cast<int>(i % 2);
    const int n = static_cast<int>(i / 2) + 2;
    const Family f = fam == 0 ? Family::Xi : Family::Lambda;
    reports[fam][static_cast<std::size_t>(n - 2)] = isolate_all(build(f, n).adapted());
  }

  Suite s{"roots", {}};
  for (int fam = 0; fam < 2; ++fam) {
    const Family f = fam == 0 ? Family::Xi : Family::Lambda;
    for (int n = 2; n <= n_max; ++n) {
      RootReport& r = reports[fam][static_cast<std::size_t>(n - 2)];
      const int unit = sturm_count(r.poly, 0, 1);
      Check c = make_check("sturm_count_unit_interval", n, unit == n - 1 && r.all_in_unit);
      c.with_family(f).numeric_value = std::to_string(unit);
      c.data = nlohmann::ordered_json{{"intervals", intervals_json(r.intervals)}};
      s.checks.push_back(std::move(c));
      s.checks.push_back(make_check("real_rooted", n, r.all_real).with_family(f));
      s.checks.push_back(make_check("squarefree", n, r.all_simple).with_family(f));
      s.checks.push_back(make_check("endpoint_bound", n, r.largest_root_bound_ok).with_family(f));
      const int even = sturm_count(build(f, n).as_upoly(), -1, 1);
      Check e = make_check("even_polynomial_sturm_count", n, even == 2 * (n - 1));
      e.with_family(f).numeric_value = std::to_string(even);
      s.checks.push_back(std::move(e));
    }
    for (int n = 2; n < n_max; ++n) {
      RootReport& p = reports[fam][static_cast<std::size_t>(n - 2)];
      RootReport& q = reports[fam][static_cast<std::size_t>(n - 1)];
      Check c = make_check("interlacing", n, check_interlacing(p, q));
      c.with_family(f).note = "roots of n vs n+1 in the adapted variable";
      s.checks.push_back(std::move(c));
    }
  }
  return s;
}

Suite extremal_suite(int n_max) { return {"extremal_zeros", extremal_zero_checks(n_max)}; }

Suite reference_suite(int n_max, int bits) {
  std::vector<std::function<std::vector<Check>()>> items;
  for (int n = 1; n <= n_max; ++n) {
    items.emplace_back([n, bits] {
      std::vector<Check> out;
      const BigFloat tol(pow2(8 - bits), bits);
      const BigFloat z1 = zeta_ref(2 * n + 1, bits), z2 = zeta_ref_alternating(2 * n + 1, bits);
      Check cz = make_check("zeta_reference_agreement", n, abs(z1 - z2) <= tol);
      cz.numeric_value = z1.to_decimal(30);
      cz.error_estimate = abs(z1 - z2).to_decimal(6);
      cz.note = "s = " + std::to_string(2 * n + 1);
      out.push_back(std::move(cz));
      const BigFloat b1 = beta_ref(2 * n, bits), b2 = beta_ref_hurwitz(2 * n, bits);
      Check cb = make_check("beta_reference_agreement", n, abs(b1 - b2) <= tol);
      cb.numeric_value = b1.to_decimal(30);
      cb.error_estimate = abs(b1 - b2).to_decimal(6);
      cb.note = "s = " + std::to_string(2 * n);
      out.push_back(std::move(cb));
      return out;
    });
  }
  return {"references", fan_out(items)};
}

Suite integral_suite(int n_max, int bits) {
  std::vector<std::function<std::vector<Check>()>> items;
  const int digits = std::max(10, static_cast<int>(bits * 0.30103));
  for (int n = 1; n <= n_max; ++n) {
    items.emplace_back([n, bits, digits] {
      std::vector<Check> out;
      const QuadOptions opt{12, Exec::Serial};
      auto add = [&](std::string name, Family f, const QuadResult& q, const BigFloat& target) {
        double rel = 0;
        const bool ok = relative_match(q.value, target, kIntegralRelTol, &rel);
        Check c = make_check(std::move(name), n, ok);
        c.with_family(f);
        c.numeric_value = q.value.to_decimal(digits);
        c.error_estimate = q.est_error.to_decimal(6);
        c.note = std::string(to_string(q.route)) + ", relative deviation " + sci(rel);
        c.data = nlohmann::ordered_json{{"nodes", q.nodes_used}, {"reference", target.to_decimal(digits)}};
        out.push_back(std::move(c));
      };
      const QuadResult qb = integral_beta(n, bits, opt);
      const QuadResult qz = integral_zeta(n, bits, opt);
      add("integral_beta", Family::Xi, qb, beta_target(n, bits));
      add("integral_zeta", Family::Lambda, qz, zeta_target(n, bits));
      if (n <= 5) {
        add("dual_route_beta", Family::Xi, integral_hyperbolic_route(Family::Xi, n, bits, opt), qb.value);
        add("dual_route_zeta", Family::Lambda, integral_hyperbolic_route(Family::Lambda, n, bits, opt), qz.value);
      }
      // Once the step is small enough each halving should gain at least 4x.
      for (const QuadResult* q : {&qb, &qz}) {
        bool ok = true;
        for (std::size_t i = 1; i < q->history.size(); ++i) ok = ok && q->history[i] * 4 <= q->history[i - 1];
        Check c = make_check("quadrature_step_halving", n, ok);
        c.with_family(q == &qb ? Family::Xi : Family::Lambda);
        nlohmann::ordered_json h = nlohmann::ordered_json::array();
        for (double e : q->history) h.push_back(sci(e));
        c.data = nlohmann::ordered_json{{"est_error_history", h}};
        out.push_back(std::move(c));
      }
      return out;
    });
  }
  return {"integral", fan_out(items)};
}

}  // namespace polyzeta
