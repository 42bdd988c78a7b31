#include "polyzeta/numbers/signed_numbers.hpp"

#include "polyzeta/errors.hpp"
#include "polyzeta/exact/combinatorics.hpp"

namespace polyzeta {

std::vector<Rational> bernoulli_table(int n_max) {
  if (n_max < 0) throw DomainError("bernoulli index must be non-negative");
  std::vector<Rational> b(static_cast<std::size_t>(n_max) + 1);
  b[0] = 1;
  for (int m = 1; m <= n_max; ++m) {
    Rational acc = 0;
    for (int k = 0; k < m; ++k) acc += Rational(binom(m + 1, k)) * b[static_cast<std::size_t>(k)];
    b[static_cast<std::size_t>(m)] = -acc / Rational(m + 1);
  }
  return b;
}

Rational bernoulli(int n) { return bernoulli_table(n).back(); }

std::vector<BigInt> euler_table(int n_max) {
  if (n_max < 0) throw DomainError("euler index must be non-negative");
  std::vector<BigInt> e(static_cast<std::size_t>(n_max) + 1, BigInt(0));
  e[0] = 1;
  // sum_{k=0}^{j} C(2j,2k) E_{2k} = 0 for j >= 1
  for (int j = 1; 2 * j <= n_max; ++j) {
    BigInt acc = 0;
    for (int k = 0; k < j; ++k) acc += binom(2 * j, 2 * k) * e[static_cast<std::size_t>(2 * k)];
    e[static_cast<std::size_t>(2 * j)] = -acc;
  }
  return e;
}

BigInt euler_number(int n) { return euler_table(n).back(); }

}  // namespace polyzeta
