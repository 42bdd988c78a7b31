#include "polyzeta/exact/combinatorics.hpp"

#include "polyzeta/errors.hpp"

namespace polyzeta {

BigInt binom(long a, long b) {
  if (a < 0) throw DomainError("unsupported-binomial-domain");
  if (b < 0 || b > a) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

BigInt factorial(long m) {
  if (m < 0) throw DomainError("factorial of a negative integer");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

BigInt double_factorial(long m) {
  if (m < -1) throw DomainError("double factorial below -1");
  if (m <= 0) return 1;
  BigInt r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

}  // namespace polyzeta
