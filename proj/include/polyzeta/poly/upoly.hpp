#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "polyzeta/exact/rational.hpp"

namespace polyzeta {

// Dense univariate polynomial over Q, coefficients stored low to high with
// no trailing zeros. The zero polynomial has degree -1.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  UPoly(std::initializer_list<Rational> coeffs);

  static UPoly monomial(const Rational& c, int degree);
  // (a + b x)^e
  static UPoly binomial_power(const Rational& a, const Rational& b, int e);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  // Leading coefficient; 0 for the zero polynomial.
  Rational lc() const;

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const { return eval(x).sign(); }
  UPoly derivative() const;
  // Positive rational multiple with coprime integer coefficients.
  UPoly primitive() const;
  UPoly monic() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Rational& s);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly operator-() const;
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Euclidean division a = q*b + r with deg r < deg b.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(UPoly a, UPoly b);

}  // namespace polyzeta
