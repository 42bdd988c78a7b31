#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polyzeta/exec.hpp"
#include "polyzeta/numeric/bigfloat.hpp"
#include "polyzeta/poly/even_polynomial.hpp"

namespace polyzeta {

enum class QuadRoute { TanhSubstitution, HyperbolicForm };
std::string_view to_string(QuadRoute r);

struct QuadResult {
  BigFloat value;
  BigFloat est_error;  // |T_h - T_{h/2}| at the last level
  long nodes_used = 0;
  QuadRoute route = QuadRoute::TanhSubstitution;
  std::vector<double> history;  // est_error per halving level
  double truncation = 0;        // upper limit U of the u-integral
};

// Step halving ran out of levels; carries the best estimate reached.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, QuadResult best) : std::runtime_error(what), best_(std::move(best)) {}
  const QuadResult& best() const { return best_; }

 private:
  QuadResult best_;
};

struct QuadOptions {
  int max_levels = 12;  // from h = 1/2 down to h = 2^-13
  Exec exec = Exec::Parallel;
};

// beta(2n) / pi^{2n-1} as the u-integral of tanh u Xi_n(tanh u) sech u / u.
// Stops once est_error <= 2^-bits (absolute).
QuadResult integral_beta(int n, int bits, const QuadOptions& opt = {});
// zeta(2n+1) / pi^{2n} as the u-integral of tanh u Lambda_n(tanh u) sech^2 u / u.
QuadResult integral_zeta(int n, int bits, const QuadOptions& opt = {});
// The Eulerian-weighted sinh/cosh integrals, scaled by 1/2^{2n-1} (Xi) or
// -1/2^{2n+1} (Lambda) and converted to the same normalized targets.
QuadResult integral_hyperbolic_route(Family family, int n, int bits, const QuadOptions& opt = {});

// Reference targets beta(2n)/pi^{2n-1} and zeta(2n+1)/pi^{2n}.
BigFloat beta_target(int n, int bits);
BigFloat zeta_target(int n, int bits);

}  // namespace polyzeta
