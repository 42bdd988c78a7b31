#pragma once

#include <vector>

#include "polyzeta/exact/rational.hpp"

namespace polyzeta {

// Type-A Eulerian numbers <m,k>: permutations of {1..m} with k descents.
// Rows 0..max_row are built eagerly by the triangular recurrence at
// construction and never change afterwards, so a const table can be read
// from any number of threads. Row 0 is the single entry 1.
class EulerianTableA {
 public:
  explicit EulerianTableA(int max_row);

  int max_row() const { return static_cast<int>(rows_.size()) - 1; }
  const std::vector<BigInt>& row(int m) const;
  // 0 outside [0, m-1] (m >= 1).
  BigInt at(int m, int k) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
};

// Type-B Eulerian numbers <m,k>^B over signed permutations; row m has m+1
// entries and <0,0>^B = 1.
class EulerianTableB {
 public:
  explicit EulerianTableB(int max_row);

  int max_row() const { return static_cast<int>(rows_.size()) - 1; }
  const std::vector<BigInt>& row(int m) const;
  // 0 outside [0, m].
  BigInt at(int m, int k) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
};

BigInt eulerian_a(int m, int k);
BigInt eulerian_b(int m, int k);

// A_m(t) = sum_k <m,k> t^k, m >= 1.
Rational eulerian_poly_a(int m, const Rational& t);
// B_m(t) = sum_k <m,k>^B t^k, m >= 0.
Rational eulerian_poly_b(int m, const Rational& t);

}  // namespace polyzeta
