// Asymptotic estimates for the Newton polygon counts.
//
// Main term, for slopes in [0, 1):
//
//   P(n) = C^{1/9} K / sqrt(6 pi) * n^{-11/18} * exp(3/2 C^{1/3} n^{2/3})
//
// Each non-trivial zeta zero gamma = 1/2 + i t contributes
//
//   g_gamma(tau) = c_gamma tau^{-gamma},   c_gamma = Gamma(gamma) zeta(gamma+1) zeta(gamma-1) / zeta'(gamma)
//
// to the exponent, evaluated at the saddle value tau = C^{1/3} n^{-1/3}.
// Zeros are stored by positive ordinate only; each term is folded with its
// conjugate so the oscillation is real by construction.
//
// Everything is carried in natural-log scale: P(100000) is about 10^1589.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "npcount/precision.hpp"
#include "npcount/zeros.hpp"

namespace npcount {

struct ResidueCoefficient {
  ZetaZero zero;
  Complex c;
};

/// c_gamma at gamma = 1/2 + i t. Throws std::invalid_argument for an unrefined zero.
ResidueCoefficient residue_coefficient(const ZetaZero& zero, const PrecisionContext& ctx);

/// Coefficients of the first k zeros (computed concurrently).
std::vector<ResidueCoefficient> residue_coefficients(std::span<const ZetaZero> zeros, std::size_t k,
                                                     const PrecisionContext& ctx);

/// A positive real m * 10^e, for values too large for a double.
struct Scientific {
  Real mantissa;
  long exponent = 0;

  std::string to_string(int digits = 10) const;
};

/// m * 10^e from the natural logarithm of a positive value.
Scientific scientific_from_log(const Real& natural_log);

struct AsymptoticBreakdown {
  std::uint64_t n = 0;
  Real tau;           // C^{1/3} n^{-1/3}
  Real log_main;      // log P(n)
  Real oscillation;   // sum over the first k zeros of 2 Re(c tau^{-gamma})
  std::size_t k_zeros = 0;

  Real log_estimate() const { return log_main + oscillation; }
};

enum class Variant {
  Closed01,          // slopes in [0, 1]
  HalfClosed,        // slopes in [0, 1/2]: N_J(n)
  SymmetricDoubled,  // symmetric polygons of height 2n: N_sym(n) ~ 2 N_J(n)
};

struct LogfExpansion {
  Real direct;     // sum_n phi(n) sum_k e^{-k n tau} / k, truncated below 2^-bits
  Real expansion;  // g_2 + g_0 + sum_gamma g_gamma
  Real residual;   // direct - expansion
  std::size_t terms = 0;
};

/// The first-zero wave y(x) = exp(2 Re(c_1 C^{-gamma_1/3} x^{gamma_1/3})).
class FirstZeroWave {
 public:
  FirstZeroWave(const ResidueCoefficient& first, const Real& C, const PrecisionContext& ctx);

  Real log_sample(const Real& x) const;
  Real sample(const Real& x) const { return exp(log_sample(x)); }
  /// Bound on |log y| at x: 2 |c_1| |C^{-gamma_1/3}| x^{1/6}.
  Real envelope(const Real& x) const;
  /// Distance in log x between successive maxima: 6 pi / t_1.
  Real log_period() const;

 private:
  Complex coefficient_;  // c_1 C^{-gamma_1/3}
  Complex exponent_;     // gamma_1 / 3
  Real amplitude_;       // 2 |c_1 C^{-gamma_1/3}|
  Real t_;
};

/// Holds C, K and the residue coefficients for repeated evaluation.
class AsymptoticModel {
 public:
  explicit AsymptoticModel(const PrecisionContext& ctx, std::vector<ResidueCoefficient> coefficients = {});

  const PrecisionContext& context() const { return ctx_; }
  const Real& C() const { return C_; }
  const Real& K() const { return K_; }
  std::span<const ResidueCoefficient> coefficients() const { return coefficients_; }

  Real saddle_tau(std::uint64_t n) const;
  Real log_leading(std::uint64_t n) const;

  /// sum_{j<k} (w_j + conj(w_j)), w_j = c_j tau^{-gamma_j}. Imaginary part is exactly zero.
  Complex folded_zero_sum(const Real& tau, std::size_t k) const;
  Real oscillation(const Real& tau, std::size_t k) const;
  /// sum_{first <= j < last} 2 |c_j| tau^{-1/2}
  Real oscillation_bound(const Real& tau, std::size_t first, std::size_t last) const;

  AsymptoticBreakdown full_estimate(std::uint64_t n, std::size_t k) const;
  Real log_variant(Variant variant, std::uint64_t n, std::size_t k) const;
  LogfExpansion logf_expansion(const Real& tau, std::size_t k) const;
  FirstZeroWave first_zero_wave() const;

 private:
  void require_zeros(std::size_t k) const;

  PrecisionContext ctx_;
  std::vector<ResidueCoefficient> coefficients_;
  Real C_;
  Real K_;
  Real log_C_;
  Real log_K_;
  Real cbrt_C_;
};

// Free-function forms of the model operations.
Real log_leading_estimate(std::uint64_t n, const PrecisionContext& ctx);
Scientific leading_estimate(std::uint64_t n, const PrecisionContext& ctx);
Real oscillation_sum(std::uint64_t n, std::span<const ResidueCoefficient> coefficients, std::size_t k,
                     const PrecisionContext& ctx);
AsymptoticBreakdown full_estimate(std::uint64_t n, std::span<const ResidueCoefficient> coefficients,
                                  std::size_t k, const PrecisionContext& ctx);
Real variant_estimate(Variant variant, std::uint64_t n, std::span<const ResidueCoefficient> coefficients,
                      std::size_t k, const PrecisionContext& ctx);
/// Builds the wave from the first bundled zero; refines it and evaluates c_1 on every call.
Real wave_sample(const Real& x, const PrecisionContext& ctx);
LogfExpansion logf_expansion_check(const Real& tau, std::span<const ResidueCoefficient> coefficients,
                                   std::size_t k, const PrecisionContext& ctx);

}  // namespace npcount
