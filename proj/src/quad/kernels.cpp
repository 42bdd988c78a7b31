#include "polyzeta/quad/kernels.hpp"

#include <cmath>

#include "polyzeta/errors.hpp"
#include "polyzeta/numbers/eulerian.hpp"

namespace polyzeta {

Integrand::Integrand(KernelKind kind, const EvenPolynomial& p, int precision_bits) : Integrand(kind, precision_bits) {
  if (kind != KernelKind::BetaTanh && kind != KernelKind::ZetaTanh) throw DomainError("tanh kernel expected");
  n_ = p.n();
  for (const auto& c : p.coeffs()) coeffs_.emplace_back(c, prec_);
  // |p| <= |lc| on (0,1), sech u <= 2 e^{-u}.
  const double lc = std::log2(std::fabs(p.leading().to_double()));
  if (kind == KernelKind::BetaTanh) {
    tail_log2_k_ = lc + 1;
    tail_rate_ = 1;
  } else {
    tail_log2_k_ = lc + 2;
    tail_rate_ = 2;
  }
}

Integrand Integrand::hyperbolic(Family family, int n, int precision_bits) {
  Integrand f(family == Family::Xi ? KernelKind::HyperB : KernelKind::HyperA, precision_bits);
  f.n_ = n;
  BigInt total = 0;
  for (int k = 0; k < n; ++k) {
    const BigInt w = family == Family::Xi ? eulerian_b(2 * n - 1, k) : eulerian_a(2 * n, k);
    total += w;
    f.coeffs_.emplace_back(Rational(k % 2 == 0 ? BigInt(w) : BigInt(-w)), precision_bits);
    f.freqs_.push_back(2 * n - 1 - 2 * k);
  }
  // |sinh(m u)| <= e^{(2n-1)u}/2 and cosh^{-j} u <= 2^j e^{-j u}.
  const double log2_w = std::log2(Rational(total).to_double());
  if (family == Family::Xi) {
    f.tail_log2_k_ = log2_w + 2 * n - 1;
    f.tail_rate_ = 1;
  } else {
    f.tail_log2_k_ = log2_w + 2 * n;
    f.tail_rate_ = 2;
  }
  return f;
}

BigFloat Integrand::at_zero() const {
  if (kind_ == KernelKind::BetaTanh || kind_ == KernelKind::ZetaTanh) return coeffs_.front();
  BigFloat s(prec_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    BigFloat t = coeffs_[k];
    t *= freqs_[k];
    s += t;
  }
  return s;
}

BigFloat Integrand::operator()(const BigFloat& u) const {
  if (u.is_zero()) return at_zero();
  switch (kind_) {
    case KernelKind::BetaTanh:
    case KernelKind::ZetaTanh: {
      const BigFloat x = tanh(u);
      const BigFloat y = x * x;
      BigFloat acc = coeffs_.back();
      for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * y + coeffs_[i];
      BigFloat w = sech(u);
      if (kind_ == KernelKind::ZetaTanh) w = w * w;
      return x * acc * w / u;
    }
    case KernelKind::HyperB:
    case KernelKind::HyperA: {
      BigFloat s(prec_);
      for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        BigFloat mu = u;
        mu *= freqs_[k];
        s += coeffs_[k] * sinh(mu);
      }
      const long power = kind_ == KernelKind::HyperB ? 2L * n_ : 2L * n_ + 1;
      return s / (u * pow(cosh(u), power));
    }
  }
  throw InternalError("unknown kernel");
}

std::vector<BigFloat> evaluate_nodes(const Integrand& f, const BigFloat& h, const std::vector<long>& ks, Exec exec) {
  std::vector<BigFloat> out(ks.size(), BigFloat(f.precision()));
  const long count = static_cast<long>(ks.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < count; ++i) {
      BigFloat u = h;
      u *= ks[static_cast<std::size_t>(i)];
      out[static_cast<std::size_t>(i)] = f(u);
    }
  } else {
    for (long i = 0; i < count; ++i) {
      BigFloat u = h;
      u *= ks[static_cast<std::size_t>(i)];
      out[static_cast<std::size_t>(i)] = f(u);
    }
  }
  return out;
}

}  // namespace polyzeta
