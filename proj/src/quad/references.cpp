#include "polyzeta/quad/references.hpp"

#include <cmath>
#include <vector>

#include "polyzeta/errors.hpp"
#include "polyzeta/exact/combinatorics.hpp"
#include "polyzeta/numbers/signed_numbers.hpp"

namespace polyzeta {
namespace {

constexpr int kGuardBits = 64;
constexpr int kMaxCorrections = 80;

// B_{2j} / (2j)!, j = 1..kMaxCorrections.
const std::vector<Rational>& em_coefficients() {
  static const std::vector<Rational> table = [] {
    const auto b = bernoulli_table(2 * kMaxCorrections);
    std::vector<Rational> out(kMaxCorrections + 1);
    for (int j = 1; j <= kMaxCorrections; ++j) out[j] = b[2 * j] / Rational(factorial(2 * j));
    return out;
  }();
  return table;
}

// Hurwitz zeta(s, a) for integer s >= 2 and rational a in (0, 1].
BigFloat hurwitz_em(int s, const Rational& a, int bits) {
  const int work = bits + kGuardBits;
  const BigFloat target(pow2(-bits - 4), work);
  const auto& coef = em_coefficients();
  for (long n = bits / 4 + 16;; n *= 2) {
    BigFloat x(Rational(n) + a, work);
    BigFloat tail = pow(x, 1 - s) / BigFloat(s - 1, work) + pow(x, -s) / BigFloat(2, work);
    // t_j = coef_j * s (s+1) ... (s+2j-2) * x^{-s-2j+1}
    BigFloat rising(s, work);
    BigFloat xpow = pow(x, -s - 1);
    const BigFloat inv_x2 = BigFloat(1, work) / (x * x);
    BigFloat prev_abs(work);
    bool converged = false;
    for (int j = 1; j < kMaxCorrections; ++j) {
      const BigFloat t = BigFloat(coef[j], work) * rising * xpow;
      // The remainder is bounded by the first omitted term once terms shrink.
      if (j > 1 && abs(t) >= prev_abs) break;
      tail += t;
      rising *= static_cast<long>(s + 2 * j - 1);
      rising *= static_cast<long>(s + 2 * j);
      xpow *= inv_x2;
      const BigFloat next = abs(BigFloat(coef[j + 1], work) * rising * xpow);
      if (next <= target) {
        converged = true;
        break;
      }
      prev_abs = abs(t);
    }
    if (!converged) continue;
    BigFloat sum(work);
    for (long k = 0; k < n; ++k) sum += pow(BigFloat(Rational(k) + a, work), -s);
    return (sum + tail).with_precision(bits + 32);
  }
}

// sum_{k>=0} (-1)^k a_k for completely monotone a_k with a_0 = 1.
template <class Term>
BigFloat cvz_sum(int bits, Term a) {
  const int work = bits + kGuardBits;
  const long terms = static_cast<long>(std::ceil((bits + 4) / std::log2(3.0 + std::sqrt(8.0)))) + 1;
  BigFloat d = pow(BigFloat(3, work) + sqrt(BigFloat(8, work)), terms);
  d = (d + BigFloat(1, work) / d) / BigFloat(2, work);
  BigFloat b(-1, work), c = -d, sum(work);
  for (long k = 0; k < terms; ++k) {
    c = b - c;
    sum += c * a(k, work);
    // b *= (k+n)(k-n) / ((k+1/2)(k+1))
    b *= 2 * (k + terms);
    b *= k - terms;
    b /= 2 * k + 1;
    b /= k + 1;
  }
  return (sum / d).with_precision(bits + 32);
}

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

BigFloat zeta_ref(int s, int bits) {
  require(s >= 3 && s % 2 == 1, "zeta_ref needs odd s >= 3");
  return hurwitz_em(s, 1, bits);
}

BigFloat zeta_ref_alternating(int s, int bits) {
  require(s >= 3 && s % 2 == 1, "zeta_ref needs odd s >= 3");
  // (1 - 2^{1-s}) >= 3/4 so the eta error grows by at most 4/3.
  const BigFloat eta = cvz_sum(bits + 2, [s](long k, int work) { return pow(BigFloat(k + 1, work), -s); });
  const int work = bits + kGuardBits;
  return (eta / (BigFloat(1, work) - BigFloat(pow2(1 - s), work))).with_precision(bits + 32);
}

BigFloat beta_ref(int s, int bits) {
  require(s >= 2 && s % 2 == 0, "beta_ref needs even s >= 2");
  return cvz_sum(bits, [s](long k, int work) { return pow(BigFloat(2 * k + 1, work), -s); });
}

BigFloat beta_ref_hurwitz(int s, int bits) {
  require(s >= 2 && s % 2 == 0, "beta_ref needs even s >= 2");
  // 4^{-s} <= 1/16 absorbs the error of the difference.
  const BigFloat d = hurwitz_em(s, Rational(1, 4), bits) - hurwitz_em(s, Rational(3, 4), bits);
  return (d * BigFloat(pow2(-2 * s), bits + kGuardBits)).with_precision(bits + 32);
}

BigFloat beta_partial_sum(int s, long terms, int bits) {
  BigFloat sum(bits);
  for (long m = 0; m < terms; ++m) {
    const BigFloat t = pow(BigFloat(2 * m + 1, bits), -s);
    if (m % 2 == 0) sum += t; else sum -= t;
  }
  return sum;
}

}  // namespace polyzeta
