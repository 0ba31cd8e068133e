// High-precision real and complex scalars backed by MPFR.
//
// Every binary operation produces a result at the larger precision of its
// operands, so a computation started at a given PrecisionContext stays at
// that precision without threading the context through each expression.

#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace npcount {

using Bits = mpfr_prec_t;

/// Working mantissa precision shared by all high-precision routines.
class PrecisionContext {
 public:
  static constexpr int kDefaultBits = 192;
  static constexpr int kMinimumBits = 64;

  PrecisionContext() = default;
  explicit PrecisionContext(int bits);

  int bits() const { return bits_; }

  /// Same context with `extra` guard bits added.
  PrecisionContext widened(int extra) const { return PrecisionContext(bits_ + extra); }

 private:
  int bits_ = kDefaultBits;
};

class Real {
 public:
  Real() : Real(Bits{PrecisionContext::kMinimumBits}) {}
  explicit Real(Bits precision);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real from_int(long value, Bits precision);
  static Real from_uint(unsigned long value, Bits precision);
  static Real from_double(double value, Bits precision);
  /// Parses a decimal literal; throws std::invalid_argument on malformed input.
  static Real from_string(std::string_view text, Bits precision);
  static Real pi(Bits precision);
  static Real log2(Bits precision);

  Bits precision() const { return mpfr_get_prec(value_); }
  /// Copy rounded to `precision` bits.
  Real rounded(Bits precision) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(value_, MPFR_RNDN); }
  /// printf-style "%.{digits}Rg": `digits` significant digits.
  std::string to_string(int digits = 15) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  /// Binary exponent e such that 2^(e-1) <= |x| < 2^e; x must be nonzero.
  long exponent() const { return mpfr_get_exp(value_); }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator+=(long rhs);
  Real& operator-=(long rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);

  Real operator-() const;

  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }

 private:
  mpfr_t value_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator+(Real a, long b);
Real operator-(Real a, long b);
Real operator*(Real a, long b);
Real operator/(Real a, long b);
Real operator*(long a, Real b);
Real operator-(long a, const Real& b);
Real operator/(long a, const Real& b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real cbrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real log10(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& base, const Real& exponent);
Real floor(const Real& x);
Real round(const Real& x);
/// x * 2^e, exact.
Real ldexp(const Real& x, long e);
Real max(const Real& a, const Real& b);

class Complex {
 public:
  Complex() = default;
  explicit Complex(Bits precision) : re_(precision), im_(precision) {}
  explicit Complex(Real re);
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}

  static Complex from_doubles(double re, double im, Bits precision);

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  Real& re() { return re_; }
  Real& im() { return im_; }
  Bits precision() const;
  Complex rounded(Bits precision) const;

  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator/=(const Complex& rhs);
  Complex& operator*=(const Real& rhs);
  Complex& operator/=(const Real& rhs);
  Complex& operator+=(long rhs);
  Complex& operator*=(long rhs);
  Complex& operator/=(long rhs);
  Complex operator-() const { return Complex(-re_, -im_); }

  friend bool operator==(const Complex& a, const Complex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  std::string to_string(int digits = 15) const;

 private:
  Real re_;
  Real im_;
};

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(Complex a, const Real& b);
Complex operator*(const Real& a, Complex b);
Complex operator/(Complex a, const Real& b);
Complex operator+(Complex a, long b);
Complex operator-(Complex a, long b);
Complex operator*(Complex a, long b);
Complex operator/(Complex a, long b);
Complex operator-(long a, const Complex& b);

Complex conj(const Complex& z);
Real abs(const Complex& z);
/// |z|^2
Real norm(const Complex& z);
Real arg(const Complex& z);
Complex exp(const Complex& z);
/// Principal branch.
Complex log(const Complex& z);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
/// exp(w * log z) on the principal branch.
Complex pow(const Complex& z, const Complex& w);
/// x^w for real x > 0.
Complex pow(const Real& x, const Complex& w);
Complex inverse(const Complex& z);

}  // namespace npcount
