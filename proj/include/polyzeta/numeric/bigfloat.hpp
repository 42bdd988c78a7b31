#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <mpfr.h>

#include "polyzeta/exact/rational.hpp"

namespace polyzeta {

// Binary floating-point value with an explicit working precision (bits).
// Every operation rounds to nearest at the precision of its result; binary
// operators produce max(lhs, rhs) precision. No process-wide default
// precision is consulted.
class BigFloat {
 public:
  explicit BigFloat(int precision_bits);
  BigFloat(long value, int precision_bits);
  BigFloat(const Rational& value, int precision_bits);
  BigFloat(std::string_view decimal, int precision_bits);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  int precision() const { return static_cast<int>(mpfr_get_prec(v_)); }
  // Re-rounds to a new precision.
  BigFloat with_precision(int precision_bits) const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // log2 of the magnitude; -inf for zero.
  double log2_abs() const;

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  BigFloat& operator*=(long o);
  BigFloat& operator/=(long o);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

  // Significant-digit decimal rendering, e.g. "0.2915609040308187801".
  std::string to_decimal(int digits) const;

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat tanh(const BigFloat& x);
BigFloat sech(const BigFloat& x);
BigFloat sinh(const BigFloat& x);
BigFloat cosh(const BigFloat& x);
BigFloat pow(const BigFloat& x, long e);
BigFloat pow(const BigFloat& x, const BigFloat& e);
// k-th root of a non-negative value.
BigFloat root(const BigFloat& x, unsigned long k);
BigFloat max(const BigFloat& a, const BigFloat& b);
BigFloat pi(int precision_bits);

// Bits needed to carry `digits` significant decimal digits.
int bits_for_digits(int digits);

}  // namespace polyzeta
