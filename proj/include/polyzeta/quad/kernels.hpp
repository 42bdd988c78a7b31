#pragma once

#include <vector>

#include "polyzeta/exec.hpp"
#include "polyzeta/numeric/bigfloat.hpp"
#include "polyzeta/poly/even_polynomial.hpp"

namespace polyzeta {

// Integrands on (0, inf) after x = tanh u. All are even in u and analytic
// in the strip |Im u| < pi/2.
enum class KernelKind {
  BetaTanh,  // tanh u * Xi(tanh u) * sech u / u
  ZetaTanh,  // tanh u * Lambda(tanh u) * sech^2 u / u
  HyperB,    // sum_k w_k (-1)^k sinh((2n-1-2k)u) / (u cosh^{2n} u)
  HyperA,    // sum_k w_k (-1)^k sinh((2n-1-2k)u) / (u cosh^{2n+1} u)
};

class Integrand {
 public:
  // Tanh kernels use the even polynomial; hyperbolic kernels the Eulerian weights.
  Integrand(KernelKind kind, const EvenPolynomial& p, int precision_bits);
  static Integrand hyperbolic(Family family, int n, int precision_bits);

  KernelKind kind() const { return kind_; }
  int precision() const { return prec_; }
  // Value with the removable singularity at 0 filled by its limit.
  BigFloat operator()(const BigFloat& u) const;
  BigFloat at_zero() const;
  // |f(u)| <= tail_constant * exp(-tail_rate * u) / u for u > 0.
  double tail_log2_constant() const { return tail_log2_k_; }
  int tail_rate() const { return tail_rate_; }

 private:
  Integrand(KernelKind kind, int prec) : kind_(kind), prec_(prec) {}

  KernelKind kind_;
  int prec_;
  int n_ = 0;
  std::vector<BigFloat> coeffs_;   // even coefficients or signed weights
  std::vector<long> freqs_;        // 2n-1-2k for hyperbolic kernels
  double tail_log2_k_ = 0;
  int tail_rate_ = 1;
};

// f(k h) for each k in ks. Serial is the reference; Parallel splits the
// loop with OpenMP. Results land by index so both are bit-identical.
std::vector<BigFloat> evaluate_nodes(const Integrand& f, const BigFloat& h, const std::vector<long>& ks, Exec exec);

}  // namespace polyzeta
