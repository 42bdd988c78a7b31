#include "polyzeta/numbers/eulerian.hpp"

#include <string>

#include "polyzeta/errors.hpp"

namespace polyzeta {
namespace {

const BigInt& entry_or_zero(const std::vector<BigInt>& row, int k) {
  static const BigInt zero = 0;
  if (k < 0 || k >= static_cast<int>(row.size())) return zero;
  return row[static_cast<std::size_t>(k)];
}

void check_row_request(int m, int max_row) {
  if (m < 0) throw DomainError("Eulerian row index must be non-negative");
  if (m > max_row) {
    throw DomainError("Eulerian row " + std::to_string(m) + " beyond table size " + std::to_string(max_row));
  }
}

Rational horner(const std::vector<BigInt>& row, const Rational& t) {
  Rational acc = 0;
  for (auto it = row.rbegin(); it != row.rend(); ++it) acc = acc * t + Rational(*it);
  return acc;
}

}  // namespace

EulerianTableA::EulerianTableA(int max_row) {
  if (max_row < 0) throw DomainError("Eulerian table size must be non-negative");
  rows_.reserve(static_cast<std::size_t>(max_row) + 1);
  rows_.push_back({BigInt(1)});
  for (int m = 1; m <= max_row; ++m) {
    const auto& prev = rows_.back();
    std::vector<BigInt> row(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
      // <m,k> = (k+1)<m-1,k> + (m-k)<m-1,k-1>
      row[static_cast<std::size_t>(k)] =
          (k + 1) * entry_or_zero(prev, k) + (m - k) * entry_or_zero(prev, k - 1);
    }
    rows_.push_back(std::move(row));
  }
}

const std::vector<BigInt>& EulerianTableA::row(int m) const {
  check_row_request(m, max_row());
  return rows_[static_cast<std::size_t>(m)];
}

BigInt EulerianTableA::at(int m, int k) const { return entry_or_zero(row(m), k); }

EulerianTableB::EulerianTableB(int max_row) {
  if (max_row < 0) throw DomainError("Eulerian table size must be non-negative");
  rows_.reserve(static_cast<std::size_t>(max_row) + 1);
  rows_.push_back({BigInt(1)});
  for (int m = 1; m <= max_row; ++m) {
    const auto& prev = rows_.back();
    std::vector<BigInt> row(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
      // <m,k>^B = (2k+1)<m-1,k>^B + (2m-2k+1)<m-1,k-1>^B
      row[static_cast<std::size_t>(k)] =
          (2 * k + 1) * entry_or_zero(prev, k) + (2 * m - 2 * k + 1) * entry_or_zero(prev, k - 1);
    }
    rows_.push_back(std::move(row));
  }
}

const std::vector<BigInt>& EulerianTableB::row(int m) const {
  check_row_request(m, max_row());
  return rows_[static_cast<std::size_t>(m)];
}

BigInt EulerianTableB::at(int m, int k) const { return entry_or_zero(row(m), k); }

BigInt eulerian_a(int m, int k) { return EulerianTableA(m).at(m, k); }

BigInt eulerian_b(int m, int k) { return EulerianTableB(m).at(m, k); }

Rational eulerian_poly_a(int m, const Rational& t) {
  if (m < 1) throw DomainError("eulerian_poly_a needs m >= 1");
  return horner(EulerianTableA(m).row(m), t);
}

Rational eulerian_poly_b(int m, const Rational& t) {
  if (m < 0) throw DomainError("eulerian_poly_b needs m >= 0");
  return horner(EulerianTableB(m).row(m), t);
}

}  // namespace polyzeta
