#include "polyzeta/quad/integrals.hpp"

#include <algorithm>
#include <cmath>

#include "polyzeta/errors.hpp"
#include "polyzeta/exact/combinatorics.hpp"
#include "polyzeta/quad/kernels.hpp"
#include "polyzeta/quad/references.hpp"

namespace polyzeta {
namespace {

constexpr int kGuardBits = 64;

// Smallest U with K e^{-rU}/U (1/r + 1) <= 2^-bits / 4, so the neglected
// tail of both the integral and the trapezoid sum stays below tolerance.
double truncation_point(const Integrand& f, int bits) {
  const double ln2 = std::log(2.0);
  const double r = f.tail_rate();
  const double log_rhs = (f.tail_log2_constant() + bits + 2) * ln2 + std::log(1.0 / r + 1.0);
  double u = 1.0;
  for (int i = 0; i < 50; ++i) u = std::max(1.0, (log_rhs - std::log(u)) / r);
  return std::ceil(u * 1.0001 + 0.5);
}

// Trapezoid rule on the even extension: h (f(0)/2 + sum_{k>=1} f(kh)).
// Each halving only evaluates the new odd-indexed nodes.
QuadResult trapezoid(const Integrand& f, int bits, QuadRoute route, const QuadOptions& opt) {
  const int work = f.precision();
  const double upper = truncation_point(f, bits);
  const BigFloat tol(pow2(-bits), work);

  QuadResult res{BigFloat(work), BigFloat(work), 0, route, {}, upper};
  const BigFloat half_f0 = f.at_zero() / BigFloat(2, work);
  BigFloat h(Rational(1, 2), work);
  BigFloat sum(work);
  res.nodes_used = 1;

  std::vector<long> ks;
  for (long k = 1; k <= static_cast<long>(std::ceil(upper * 2)); ++k) ks.push_back(k);
  for (const auto& v : evaluate_nodes(f, h, ks, opt.exec)) sum += v;
  res.nodes_used += static_cast<long>(ks.size());
  BigFloat prev = h * (half_f0 + sum);

  for (int level = 1; level <= opt.max_levels; ++level) {
    h /= 2;
    const long last = static_cast<long>(std::ceil(upper * std::ldexp(2.0, level)));
    ks.clear();
    for (long k = 1; k <= last; k += 2) ks.push_back(k);
    // Summed in index order regardless of how the nodes were evaluated.
    for (const auto& v : evaluate_nodes(f, h, ks, opt.exec)) sum += v;
    res.nodes_used += static_cast<long>(ks.size());
    BigFloat cur = h * (half_f0 + sum);
    res.est_error = abs(cur - prev);
    res.value = cur;
    res.history.push_back(res.est_error.to_double());
    if (res.est_error <= tol) return res;
    prev = cur;
  }
  throw QuadratureError("quadrature did not converge within the node budget", res);
}

void require_n(int n) {
  if (n < 1 || n > kMaxPolynomialIndex) throw DomainError("n out of range");
}

}  // namespace

std::string_view to_string(QuadRoute r) {
  return r == QuadRoute::TanhSubstitution ? "tanh_substitution" : "hyperbolic_form";
}

QuadResult integral_beta(int n, int bits, const QuadOptions& opt) {
  require_n(n);
  const Integrand f(KernelKind::BetaTanh, build(Family::Xi, n), bits + kGuardBits);
  return trapezoid(f, bits, QuadRoute::TanhSubstitution, opt);
}

QuadResult integral_zeta(int n, int bits, const QuadOptions& opt) {
  require_n(n);
  const Integrand f(KernelKind::ZetaTanh, build(Family::Lambda, n), bits + kGuardBits);
  return trapezoid(f, bits, QuadRoute::TanhSubstitution, opt);
}

QuadResult integral_hyperbolic_route(Family family, int n, int bits, const QuadOptions& opt) {
  require_n(n);
  // value = J * c, where J is the raw sum of integrals; the tolerance on J
  // is tightened by log2|c| so the converted value meets 2^-bits.
  Rational stage, convert;
  if (family == Family::Xi) {
    stage = pow2(-(2 * n - 1));
    convert = Rational(n % 2 == 1 ? 1 : -1) / (pow2(2 * n - 1) * Rational(factorial(2 * n - 1)));
  } else {
    stage = -pow2(-(2 * n + 1));
    convert = Rational(n % 2 == 0 ? 2 : -2) /
              ((Rational(1) - pow2(-(2 * n + 1))) * Rational(factorial(2 * n)));
  }
  const Rational scale = stage * convert;
  const int log2_scale = static_cast<int>(std::ceil(std::log2(scale.abs().to_double())));
  const int raw_bits = std::max(8, bits + log2_scale);
  // Individual sinh terms exceed J by roughly 1/|scale|; carry those bits too.
  const Integrand f = Integrand::hyperbolic(family, n, bits + kGuardBits + std::max(0, -log2_scale));
  QuadResult raw = trapezoid(f, raw_bits, QuadRoute::HyperbolicForm, opt);
  const BigFloat c(scale, f.precision());
  raw.value = raw.value * c;
  raw.est_error = raw.est_error * abs(c);
  for (auto& e : raw.history) e *= std::fabs(scale.to_double());
  return raw;
}

BigFloat beta_target(int n, int bits) {
  const int work = bits + kGuardBits;
  return (beta_ref(2 * n, work) / pow(pi(work), 2 * n - 1)).with_precision(bits + 32);
}

BigFloat zeta_target(int n, int bits) {
  const int work = bits + kGuardBits;
  return (zeta_ref(2 * n + 1, work) / pow(pi(work), 2 * n)).with_precision(bits + 32);
}

}  // namespace polyzeta
