#pragma once

#include "polyzeta/exact/rational.hpp"

namespace polyzeta {

// C(a, b) with the vanishing convention: 0 whenever b < 0 or b > a.
// A negative upper index throws DomainError("unsupported-binomial-domain").
BigInt binom(long a, long b);

BigInt factorial(long m);

// m!! for m >= -1, with (-1)!! = 0!! = 1.
BigInt double_factorial(long m);

}  // namespace polyzeta
