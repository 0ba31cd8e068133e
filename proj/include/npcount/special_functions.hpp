// Gamma, digamma, Riemann zeta and its derivative at arbitrary precision,
// plus the two constants of the Newton polygon asymptotics:
//
//   C = 2 zeta(3) / zeta(2)
//   K = exp(-2 zeta'(-1) - log(2 pi) / 6)
//
// All functions are pure and thread-safe. Results are rounded to the
// context precision; internal evaluation carries guard bits.

#pragma once

#include <gmpxx.h>

#include "npcount/precision.hpp"

namespace npcount {

/// Exact Bernoulli number B_n (B_1 = -1/2). Cached process-wide.
mpq_class bernoulli_exact(unsigned n);

/// B_n rounded to `precision` bits.
Real bernoulli(unsigned n, Bits precision);

/// Gamma(s). Throws PoleError at non-positive integers.
Complex complex_gamma(const Complex& s, const PrecisionContext& ctx);

/// Digamma psi(s) = Gamma'(s)/Gamma(s). Throws PoleError at non-positive integers.
Complex digamma(const Complex& s, const PrecisionContext& ctx);

struct ZetaValue {
  Complex value;
  Complex derivative;
};

/// zeta(s) and zeta'(s) together; Euler-Maclaurin for Re(s) >= 0 and the
/// functional equation below that. Throws PoleError at s = 1.
ZetaValue zeta_with_derivative(const Complex& s, const PrecisionContext& ctx);

Complex complex_zeta(const Complex& s, const PrecisionContext& ctx);
Complex zeta_derivative(const Complex& s, const PrecisionContext& ctx);

Real constant_C(const PrecisionContext& ctx);
Real constant_K(const PrecisionContext& ctx);

namespace detail {

/// Plain Euler-Maclaurin summation with no reflection. Valid anywhere off
/// s = 1 as long as |s| stays well below the direct-sum length; exposed so
/// tests can check the functional equation against two independent routes.
ZetaValue zeta_euler_maclaurin(const Complex& s, const PrecisionContext& ctx);

/// log Gamma(s) from Stirling's series, for Re(s) large. Branch unspecified.
Complex log_gamma_stirling(const Complex& s, Bits precision);

}  // namespace detail

}  // namespace npcount
