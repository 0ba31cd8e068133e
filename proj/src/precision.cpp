#include "npcount/precision.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace npcount {

PrecisionContext::PrecisionContext(int bits) : bits_(bits) {
  if (bits < kMinimumBits) {
    throw std::invalid_argument("precision must be at least " + std::to_string(kMinimumBits) +
                                " bits, got " + std::to_string(bits));
  }
}

// ---------------------------------------------------------------- Real

Real::Real(Bits precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  // Steal the limbs; leave `other` as a valid minimal-precision zero.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::from_int(long value, Bits precision) {
  Real r(precision);
  mpfr_set_si(r.value_, value, MPFR_RNDN);
  return r;
}

Real Real::from_uint(unsigned long value, Bits precision) {
  Real r(precision);
  mpfr_set_ui(r.value_, value, MPFR_RNDN);
  return r;
}

Real Real::from_double(double value, Bits precision) {
  Real r(precision);
  mpfr_set_d(r.value_, value, MPFR_RNDN);
  return r;
}

Real Real::from_string(std::string_view text, Bits precision) {
  Real r(precision);
  std::string owned(text);
  char* end = nullptr;
  if (!owned.empty()) mpfr_strtofr(r.value_, owned.c_str(), &end, 10, MPFR_RNDN);
  if (end == nullptr || end == owned.c_str() || *end != '\0' || !r.is_finite()) {
    throw std::invalid_argument("not a decimal number: '" + owned + "'");
  }
  return r;
}

Real Real::pi(Bits precision) {
  Real r(precision);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

Real Real::log2(Bits precision) {
  Real r(precision);
  mpfr_const_log2(r.value_, MPFR_RNDN);
  return r;
}

Real Real::rounded(Bits precision) const {
  Real r(precision);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

std::string Real::to_string(int digits) const {
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Rg", digits, value_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

namespace {

// Raises the precision of `target` so that in-place results keep the wider operand.
void widen_to(mpfr_ptr target, Bits precision) {
  if (mpfr_get_prec(target) < precision) {
    mpfr_prec_round(target, precision, MPFR_RNDN);
  }
}

}  // namespace

Real& Real::operator+=(const Real& rhs) {
  widen_to(value_, rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  widen_to(value_, rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  widen_to(value_, rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  widen_to(value_, rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator+=(long rhs) {
  mpfr_add_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(long rhs) {
  mpfr_sub_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

namespace {

Bits wider(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

template <typename Fn>
Real unary(const Real& x, Fn fn) {
  Real r(x.precision());
  fn(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Real operator+(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator+(Real a, long b) { return a += b; }
Real operator-(Real a, long b) { return a -= b; }
Real operator*(Real a, long b) { return a *= b; }
Real operator/(Real a, long b) { return a /= b; }
Real operator*(long a, Real b) { return b *= a; }

Real operator-(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_sub(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

Real operator/(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_div(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real cbrt(const Real& x) { return unary(x, mpfr_cbrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real expm1(const Real& x) { return unary(x, mpfr_expm1); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log1p(const Real& x) { return unary(x, mpfr_log1p); }
Real log10(const Real& x) { return unary(x, mpfr_log10); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }

Real atan2(const Real& y, const Real& x) {
  Real r(wider(y, x));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& base, const Real& exponent) {
  Real r(wider(base, exponent));
  mpfr_pow(r.get(), base.get(), exponent.get(), MPFR_RNDN);
  return r;
}

Real floor(const Real& x) {
  Real r(x.precision());
  mpfr_floor(r.get(), x.get());
  return r;
}

Real round(const Real& x) {
  Real r(x.precision());
  mpfr_round(r.get(), x.get());
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r(x.precision());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

// ---------------------------------------------------------------- Complex

Complex::Complex(Real re) : re_(std::move(re)), im_(Real(re_.precision())) {}

Complex Complex::from_doubles(double re, double im, Bits precision) {
  return Complex(Real::from_double(re, precision), Real::from_double(im, precision));
}

Bits Complex::precision() const { return std::max(re_.precision(), im_.precision()); }

Complex Complex::rounded(Bits precision) const { return Complex(re_.rounded(precision), im_.rounded(precision)); }

Complex& Complex::operator+=(const Complex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& rhs) { return *this = *this * rhs; }
Complex& Complex::operator/=(const Complex& rhs) { return *this = *this / rhs; }

Complex& Complex::operator*=(const Real& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

Complex& Complex::operator/=(const Real& rhs) {
  re_ /= rhs;
  im_ /= rhs;
  return *this;
}

Complex& Complex::operator+=(long rhs) {
  re_ += rhs;
  return *this;
}

Complex& Complex::operator*=(long rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

Complex& Complex::operator/=(long rhs) {
  re_ /= rhs;
  im_ /= rhs;
  return *this;
}

std::string Complex::to_string(int digits) const {
  std::string im = im_.to_string(digits);
  if (im.front() != '-') im.insert(im.begin(), '+');
  return re_.to_string(digits) + im + "i";
}

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }

Complex operator*(const Complex& a, const Complex& b) {
  return Complex(a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re());
}

Complex operator/(const Complex& a, const Complex& b) {
  // Smith's algorithm keeps intermediate magnitudes bounded.
  if (abs(b.re()) >= abs(b.im())) {
    const Real ratio = b.im() / b.re();
    const Real denom = b.re() + b.im() * ratio;
    return Complex((a.re() + a.im() * ratio) / denom, (a.im() - a.re() * ratio) / denom);
  }
  const Real ratio = b.re() / b.im();
  const Real denom = b.re() * ratio + b.im();
  return Complex((a.re() * ratio + a.im()) / denom, (a.im() * ratio - a.re()) / denom);
}

Complex operator*(Complex a, const Real& b) { return a *= b; }
Complex operator*(const Real& a, Complex b) { return b *= a; }
Complex operator/(Complex a, const Real& b) { return a /= b; }
Complex operator+(Complex a, long b) { return a += b; }
Complex operator-(Complex a, long b) { return a += -b; }
Complex operator*(Complex a, long b) { return a *= b; }
Complex operator/(Complex a, long b) { return a /= b; }
Complex operator-(long a, const Complex& b) { return Complex(a - b.re(), -b.im()); }

Complex conj(const Complex& z) { return Complex(z.re(), -z.im()); }

Real abs(const Complex& z) {
  Real r(z.precision());
  mpfr_hypot(r.get(), z.re().get(), z.im().get(), MPFR_RNDN);
  return r;
}

Real norm(const Complex& z) { return z.re() * z.re() + z.im() * z.im(); }

Real arg(const Complex& z) { return atan2(z.im(), z.re()); }

Complex exp(const Complex& z) {
  const Bits p = z.precision();
  const Real modulus = exp(z.re().rounded(p));
  Real s(p);
  Real c(p);
  mpfr_sin_cos(s.get(), c.get(), z.im().get(), MPFR_RNDN);
  return Complex(modulus * c, modulus * s);
}

Complex log(const Complex& z) {
  return Complex(log(abs(z)), arg(z));
}

Complex sin(const Complex& z) {
  const Bits p = z.precision();
  Real s(p);
  Real c(p);
  mpfr_sin_cos(s.get(), c.get(), z.re().get(), MPFR_RNDN);
  const Real y = z.im().rounded(p);
  return Complex(s * cosh(y), c * sinh(y));
}

Complex cos(const Complex& z) {
  const Bits p = z.precision();
  Real s(p);
  Real c(p);
  mpfr_sin_cos(s.get(), c.get(), z.re().get(), MPFR_RNDN);
  const Real y = z.im().rounded(p);
  return Complex(c * cosh(y), -(s * sinh(y)));
}

Complex pow(const Complex& z, const Complex& w) { return exp(w * log(z)); }

Complex pow(const Real& x, const Complex& w) { return exp(w * log(x)); }

Complex inverse(const Complex& z) { return Complex(Real::from_int(1, z.precision())) / z; }

}  // namespace npcount
