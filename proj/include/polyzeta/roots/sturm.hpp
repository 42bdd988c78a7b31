#pragma once

#include <vector>

#include "polyzeta/exact/rational.hpp"
#include "polyzeta/poly/even_polynomial.hpp"
#include "polyzeta/poly/upoly.hpp"

namespace polyzeta {

// Endpoints that land on a root are moved right by this step.
Rational endpoint_shift_step();
inline constexpr int kMaxEndpointShifts = 8;

// Signed remainder sequence p, p', -rem(p, p'), ... with each remainder
// scaled by a positive rational to coprime integer coefficients.
class SturmChain {
 public:
  explicit SturmChain(const UPoly& p);

  const std::vector<UPoly>& polys() const { return polys_; }
  const UPoly& target() const { return polys_.front(); }
  // Last entry constant and nonzero.
  bool squarefree() const;

  int variations_at(const Rational& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;

 private:
  std::vector<UPoly> polys_;
};

// Distinct real roots in (a, b]. An endpoint that is a root is shifted right
// by endpoint_shift_step(), at most kMaxEndpointShifts times, then DomainError.
int sturm_count(const SturmChain& chain, Rational a, Rational b);
int sturm_count(const UPoly& p, const Rational& a, const Rational& b);
int sturm_count(const AdaptedPolynomial& p, const Rational& a, const Rational& b);
// Distinct real roots on the whole line.
int sturm_count_real(const SturmChain& chain);

}  // namespace polyzeta
