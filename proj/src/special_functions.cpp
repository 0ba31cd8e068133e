#include "npcount/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>
#include <vector>

#include "npcount/errors.hpp"

namespace npcount {

namespace {

constexpr int kGuardBits = 40;

class BernoulliCache {
 public:
  mpq_class get(unsigned n) {
    std::lock_guard lock(mutex_);
    extend(n);
    return numbers_[n];
  }

 private:
  // B_m = -1/(m+1) * sum_{k<m} binom(m+1, k) B_k
  void extend(unsigned n) {
    if (numbers_.empty()) numbers_.emplace_back(1);
    mpz_class binom;
    for (unsigned m = static_cast<unsigned>(numbers_.size()); m <= n; ++m) {
      if (m > 1 && m % 2 == 1) {
        numbers_.emplace_back(0);
        continue;
      }
      mpq_class sum(0);
      for (unsigned k = 0; k < m; ++k) {
        if (numbers_[k] == 0) continue;
        mpz_bin_uiui(binom.get_mpz_t(), m + 1, k);
        sum += mpq_class(binom) * numbers_[k];
      }
      mpq_class value = -sum / mpq_class(m + 1);
      value.canonicalize();
      numbers_.push_back(value);
    }
  }

  std::mutex mutex_;
  std::vector<mpq_class> numbers_;
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

Real real_of(const mpq_class& q, Bits precision) {
  Real r(precision);
  mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

// Distance below which a point counts as sitting on a pole.
Real pole_tolerance(const PrecisionContext& ctx, Bits wp) {
  return ldexp(Real::from_int(1, wp), 8 - ctx.bits());
}

bool near_nonpositive_integer(const Complex& s, const PrecisionContext& ctx) {
  const Bits wp = s.precision();
  const Real nearest = round(s.re());
  if (nearest > 0) return false;
  const Real distance = abs(Complex(s.re() - nearest, s.im()));
  return distance < pole_tolerance(ctx, wp);
}

Complex one(Bits wp) { return Complex(Real::from_int(1, wp)); }

// Number of upward shifts that bring Re(s) to at least `target`.
long shift_count(const Complex& s, long target) {
  const double re = s.re().to_double();
  return re >= static_cast<double>(target) ? 0 : static_cast<long>(std::ceil(target - re));
}

// Gamma(s) for Re(s) >= 1/2 by upward recurrence into the Stirling regime.
Complex gamma_right_half(const Complex& s, const PrecisionContext& ctx, Bits wp) {
  const long shift = shift_count(s, std::max<long>(ctx.bits() / 4, 16));
  Complex product = one(wp);
  Complex z = s;
  for (long j = 0; j < shift; ++j) {
    product *= z;
    z += 1;
  }
  return exp(detail::log_gamma_stirling(z, wp)) / product;
}

Complex digamma_right_half(const Complex& s, const PrecisionContext& ctx, Bits wp) {
  const long shift = shift_count(s, std::max<long>(ctx.bits() / 4, 16));
  Complex correction(wp);
  Complex z = s;
  for (long j = 0; j < shift; ++j) {
    correction += inverse(z);
    z += 1;
  }
  // psi(z) ~ log z - 1/(2z) - sum B_{2k} / (2k z^{2k})
  const Complex inv = inverse(z);
  const Complex inv2 = inv * inv;
  Complex result = log(z) - inv / 2;
  Complex power = inv2;
  const Real cutoff = ldexp(Real::from_int(1, wp), -static_cast<long>(wp));
  for (unsigned k = 1; k <= static_cast<unsigned>(wp); ++k) {
    const Complex term = power * bernoulli(2 * k, wp) / static_cast<long>(2 * k);
    result -= term;
    if (abs(term) < cutoff) return result - correction;
    power *= inv2;
  }
  throw ConvergenceError("digamma asymptotic series did not converge");
}

// chi(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s), with zeta(s) = chi(s) zeta(1 - s).
struct ChiValue {
  Complex value;
  Complex derivative;
};

ChiValue chi_with_derivative(const Complex& s, const PrecisionContext& ctx, Bits wp) {
  const Real pi = Real::pi(wp);
  const Real log_two_pi = log(pi * 2);
  const Complex reflected = 1 - s;
  const Complex prefactor = exp(s * log_two_pi - Complex(log(pi))) * gamma_right_half(reflected, ctx, wp);
  const Complex half_angle = s * pi / 2;
  const Complex sine = sin(half_angle);
  const Complex cosine = cos(half_angle);
  const Complex psi = digamma_right_half(reflected, ctx, wp);
  return {prefactor * sine, prefactor * ((Complex(log_two_pi) - psi) * sine + cosine * (pi / 2))};
}

}  // namespace

mpq_class bernoulli_exact(unsigned n) { return bernoulli_cache().get(n); }

Real bernoulli(unsigned n, Bits precision) { return real_of(bernoulli_exact(n), precision); }

namespace detail {

Complex log_gamma_stirling(const Complex& z, Bits wp) {
  // (z - 1/2) log z - z + log(2 pi)/2 + sum B_{2k} / (2k (2k-1) z^{2k-1})
  const Complex log_z = log(z);
  Complex result = (z - Complex(Real::from_double(0.5, wp))) * log_z - z;
  result += Complex(log(Real::pi(wp) * 2) / 2);
  const Complex inv = inverse(z);
  const Complex inv2 = inv * inv;
  Complex power = inv;
  const Real cutoff = ldexp(Real::from_int(1, wp), -static_cast<long>(wp));
  for (unsigned k = 1; k <= static_cast<unsigned>(wp); ++k) {
    const long denom = static_cast<long>(2 * k) * static_cast<long>(2 * k - 1);
    const Complex term = power * bernoulli(2 * k, wp) / denom;
    result += term;
    if (abs(term) < cutoff) return result;
    power *= inv2;
  }
  throw ConvergenceError("Stirling series did not converge at s = " + z.to_string(10));
}

ZetaValue zeta_euler_maclaurin(const Complex& s_in, const PrecisionContext& ctx) {
  const Bits wp = ctx.bits() + kGuardBits;
  const Complex s = s_in.rounded(wp);
  if (abs(s - 1) < pole_tolerance(ctx, wp)) {
    throw PoleError("zeta has a pole at s = 1");
  }
  const double magnitude = abs(s).to_double();
  const long terms = std::max<long>(32, static_cast<long>(std::ceil(magnitude)) + ctx.bits() / 2);
  const unsigned corrections = static_cast<unsigned>(ctx.bits() / 4);

  Complex value(wp);
  Complex derivative(wp);
  for (long n = 1; n < terms; ++n) {
    const Real log_n = log(Real::from_int(n, wp));
    const Complex power = exp(-s * log_n);  // n^{-s}
    value += power;
    derivative -= power * log_n;
  }

  const Real big_n = Real::from_int(terms, wp);
  const Real log_big_n = log(big_n);
  const Complex n_pow = exp(-s * log_big_n);  // N^{-s}
  const Complex s_minus_one = s - 1;
  const Complex head = n_pow * big_n / s_minus_one;  // N^{1-s}/(s-1)
  value += head;
  derivative -= head * (Complex(log_big_n) + inverse(s_minus_one));
  value += n_pow / 2;
  derivative -= n_pow * log_big_n / 2;

  // T_k = B_{2k} Q_k(s) N^{-s-2k+1},  Q_k(s) = s (s+1) ... (s+2k-2) / (2k)!
  Complex rising = s / 2;                // Q_1
  Complex rising_derivative = one(wp) / 2;  // Q_1'
  Real scale = Real::from_int(1, wp) / big_n;  // N^{1-2k}
  const Real inv_n2 = scale * scale;
  for (unsigned k = 1; k <= corrections; ++k) {
    const Real b = bernoulli(2 * k, wp);
    const Complex base = n_pow * (b * scale);
    const Complex term = rising * base;
    value += term;
    derivative += (rising_derivative - rising * log_big_n) * base;

    const long a = static_cast<long>(2 * k - 1);
    const Complex u = (s + a) * (s + (a + 1));
    const Complex du = s * 2 + (2 * a + 1);
    const long denom = static_cast<long>(2 * k + 1) * static_cast<long>(2 * k + 2);
    rising_derivative = (rising_derivative * u + rising * du) / denom;
    rising = rising * u / denom;
    scale *= inv_n2;
  }
  return {value, derivative};
}

}  // namespace detail

Complex complex_gamma(const Complex& s_in, const PrecisionContext& ctx) {
  const Bits wp = ctx.bits() + kGuardBits;
  const Complex s = s_in.rounded(wp);
  if (near_nonpositive_integer(s, ctx)) {
    throw PoleError("Gamma has a pole at s = " + s.re().to_string(6));
  }
  if (s.re() >= Real::from_double(0.5, wp)) {
    return gamma_right_half(s, ctx, wp).rounded(ctx.bits());
  }
  // Gamma(s) = pi / (sin(pi s) Gamma(1 - s))
  const Real pi = Real::pi(wp);
  const Complex result = Complex(pi) / (sin(s * pi) * gamma_right_half(1 - s, ctx, wp));
  return result.rounded(ctx.bits());
}

Complex digamma(const Complex& s_in, const PrecisionContext& ctx) {
  const Bits wp = ctx.bits() + kGuardBits;
  const Complex s = s_in.rounded(wp);
  if (near_nonpositive_integer(s, ctx)) {
    throw PoleError("digamma has a pole at s = " + s.re().to_string(6));
  }
  if (s.re() >= Real::from_double(0.5, wp)) {
    return digamma_right_half(s, ctx, wp).rounded(ctx.bits());
  }
  // psi(s) = psi(1 - s) - pi cot(pi s)
  const Real pi = Real::pi(wp);
  const Complex angle = s * pi;
  const Complex result = digamma_right_half(1 - s, ctx, wp) - cos(angle) / sin(angle) * pi;
  return result.rounded(ctx.bits());
}

ZetaValue zeta_with_derivative(const Complex& s_in, const PrecisionContext& ctx) {
  const Bits wp = ctx.bits() + kGuardBits;
  const Complex s = s_in.rounded(wp);
  if (s.re().sign() >= 0) {
    ZetaValue z = detail::zeta_euler_maclaurin(s, ctx);
    return {z.value.rounded(ctx.bits()), z.derivative.rounded(ctx.bits())};
  }
  // zeta(s) = chi(s) zeta(1-s);  zeta'(s) = chi'(s) zeta(1-s) - chi(s) zeta'(1-s)
  const ZetaValue mirror = detail::zeta_euler_maclaurin(1 - s, ctx.widened(kGuardBits));
  const ChiValue chi = chi_with_derivative(s, ctx, wp);
  const Complex value = chi.value * mirror.value;
  const Complex derivative = chi.derivative * mirror.value - chi.value * mirror.derivative;
  return {value.rounded(ctx.bits()), derivative.rounded(ctx.bits())};
}

Complex complex_zeta(const Complex& s, const PrecisionContext& ctx) {
  return zeta_with_derivative(s, ctx).value;
}

Complex zeta_derivative(const Complex& s, const PrecisionContext& ctx) {
  return zeta_with_derivative(s, ctx).derivative;
}

Real constant_C(const PrecisionContext& ctx) {
  const PrecisionContext wide = ctx.widened(kGuardBits);
  const Bits wp = wide.bits();
  const Real zeta3 = complex_zeta(Complex(Real::from_int(3, wp)), wide).re();
  const Real zeta2 = complex_zeta(Complex(Real::from_int(2, wp)), wide).re();
  return (zeta3 * 2 / zeta2).rounded(ctx.bits());
}

Real constant_K(const PrecisionContext& ctx) {
  const PrecisionContext wide = ctx.widened(kGuardBits);
  const Bits wp = wide.bits();
  const Real zeta_prime = zeta_derivative(Complex(Real::from_int(-1, wp)), wide).re();
  const Real log_two_pi = log(Real::pi(wp) * 2);
  return exp(-(zeta_prime * 2) - log_two_pi / 6).rounded(ctx.bits());
}

}  // namespace npcount
