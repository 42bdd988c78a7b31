#include "polyzeta/roots/sturm.hpp"

#include "polyzeta/errors.hpp"

namespace polyzeta {
namespace {

int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

Rational endpoint_shift_step() { return pow2(-64); }

SturmChain::SturmChain(const UPoly& p) {
  if (p.is_zero()) throw DomainError("sturm chain of the zero polynomial");
  polys_.push_back(p);
  if (p.degree() == 0) return;
  polys_.push_back(p.derivative());
  while (true) {
    const UPoly& a = polys_[polys_.size() - 2];
    const UPoly& b = polys_.back();
    UPoly r = divmod(a, b).second;
    if (r.is_zero()) break;
    polys_.push_back((-r).primitive());
  }
}

bool SturmChain::squarefree() const { return polys_.back().degree() == 0; }

int SturmChain::variations_at(const Rational& x) const {
  std::vector<int> s;
  s.reserve(polys_.size());
  for (const auto& q : polys_) s.push_back(q.sign_at(x));
  return count_variations(s);
}

int SturmChain::variations_at_neg_inf() const {
  std::vector<int> s;
  for (const auto& q : polys_) s.push_back(q.degree() % 2 == 0 ? q.lc().sign() : -q.lc().sign());
  return count_variations(s);
}

int SturmChain::variations_at_pos_inf() const {
  std::vector<int> s;
  for (const auto& q : polys_) s.push_back(q.lc().sign());
  return count_variations(s);
}

int sturm_count(const SturmChain& chain, Rational a, Rational b) {
  if (!(a < b)) throw DomainError("sturm_count needs a < b");
  const UPoly& p = chain.target();
  // Moving either endpoint right keeps the half-open (a, b] meaning as long
  // as no second root sits within the shift.
  auto settle = [&](Rational& x) {
    for (int i = 0; p.sign_at(x) == 0; ++i) {
      if (i == kMaxEndpointShifts) throw DomainError("endpoint-root: retries exhausted");
      x += endpoint_shift_step();
    }
  };
  settle(a);
  settle(b);
  if (!(a < b)) throw DomainError("endpoint shift collapsed the interval");
  return chain.variations_at(a) - chain.variations_at(b);
}

int sturm_count(const UPoly& p, const Rational& a, const Rational& b) { return sturm_count(SturmChain(p), a, b); }

int sturm_count(const AdaptedPolynomial& p, const Rational& a, const Rational& b) {
  return sturm_count(SturmChain(p.poly), a, b);
}

int sturm_count_real(const SturmChain& chain) {
  return chain.variations_at_neg_inf() - chain.variations_at_pos_inf();
}

}  // namespace polyzeta
