#include "polyzeta/numeric/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polyzeta/errors.hpp"

namespace polyzeta {
namespace {

mpfr_prec_t clamp_prec(int bits) {
  if (bits < MPFR_PREC_MIN) return MPFR_PREC_MIN;
  return static_cast<mpfr_prec_t>(bits);
}

int max_prec(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

template <typename Fn>
BigFloat unary(const BigFloat& x, Fn fn) {
  BigFloat r(x.precision());
  fn(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

BigFloat::BigFloat(int precision_bits) {
  mpfr_init2(v_, clamp_prec(precision_bits));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, int precision_bits) {
  mpfr_init2(v_, clamp_prec(precision_bits));
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, int precision_bits) {
  mpfr_init2(v_, clamp_prec(precision_bits));
  mpfr_set_q(v_, value.raw().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(std::string_view decimal, int precision_bits) {
  mpfr_init2(v_, clamp_prec(precision_bits));
  const std::string s(decimal);
  if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(v_);
    throw DomainError("not a decimal number: " + s);
  }
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::with_precision(int precision_bits) const {
  BigFloat r(precision_bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

double BigFloat::log2_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& o) {
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& o) {
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& o) {
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator/=(long o) {
  mpfr_div_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::string BigFloat::to_decimal(int digits) const {
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, "%.*Rg", std::max(1, digits), v_) < 0) return "nan";
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat sqrt(const BigFloat& x) { return unary(x, mpfr_sqrt); }
BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }
BigFloat log(const BigFloat& x) { return unary(x, mpfr_log); }
BigFloat tanh(const BigFloat& x) { return unary(x, mpfr_tanh); }
BigFloat sech(const BigFloat& x) { return unary(x, mpfr_sech); }
BigFloat sinh(const BigFloat& x) { return unary(x, mpfr_sinh); }
BigFloat cosh(const BigFloat& x) { return unary(x, mpfr_cosh); }

BigFloat pow(const BigFloat& x, long e) {
  BigFloat r(x.precision());
  mpfr_pow_si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& x, const BigFloat& e) {
  BigFloat r(std::max(x.precision(), e.precision()));
  mpfr_pow(r.get(), x.get(), e.get(), MPFR_RNDN);
  return r;
}

BigFloat root(const BigFloat& x, unsigned long k) {
  if (k == 0) throw DomainError("zeroth root");
  BigFloat r(x.precision());
  mpfr_rootn_ui(r.get(), x.get(), k, MPFR_RNDN);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigFloat pi(int precision_bits) {
  BigFloat r(precision_bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

int bits_for_digits(int digits) {
  return static_cast<int>(std::ceil(std::max(1, digits) * 3.3219280948873623));
}

}  // namespace polyzeta
