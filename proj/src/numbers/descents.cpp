#include "polyzeta/numbers/descents.hpp"

#include <algorithm>
#include <numeric>

#include "polyzeta/errors.hpp"

namespace polyzeta {

std::vector<BigInt> descent_counts_a(int m) {
  if (m < 0 || m > 10) throw DomainError("descent enumeration limited to m <= 10");
  if (m == 0) return {BigInt(1)};
  std::vector<long> counts(static_cast<std::size_t>(m), 0);
  std::vector<int> w(static_cast<std::size_t>(m));
  std::iota(w.begin(), w.end(), 1);
  do {
    int d = 0;
    for (int i = 0; i + 1 < m; ++i) d += w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(i) + 1];
    ++counts[static_cast<std::size_t>(d)];
  } while (std::next_permutation(w.begin(), w.end()));
  return {counts.begin(), counts.end()};
}

std::vector<BigInt> descent_counts_b(int m) {
  if (m < 0 || m > 8) throw DomainError("signed descent enumeration limited to m <= 8");
  std::vector<long> counts(static_cast<std::size_t>(m) + 1, 0);
  std::vector<int> w(static_cast<std::size_t>(m));
  std::iota(w.begin(), w.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      int d = 0;
      int prev = 0;
      for (int i = 0; i < m; ++i) {
        const int v = (mask >> i & 1u) ? -w[static_cast<std::size_t>(i)] : w[static_cast<std::size_t>(i)];
        d += prev > v;
        prev = v;
      }
      ++counts[static_cast<std::size_t>(d)];
    }
  } while (std::next_permutation(w.begin(), w.end()));
  return {counts.begin(), counts.end()};
}

}  // namespace polyzeta
