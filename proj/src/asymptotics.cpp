#include "npcount/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

#include "npcount/enumeration.hpp"
#include "npcount/errors.hpp"
#include "npcount/special_functions.hpp"

namespace npcount {

namespace {

constexpr int kGuardBits = 32;
// Largest direct-sum length the log f check will attempt.
constexpr std::size_t kMaxLogfTerms = 50'000'000;

Complex critical_point(const Real& t) {
  return Complex(Real::from_double(0.5, t.precision()), t);
}

Real ratio(long num, long den, Bits bits) { return Real::from_int(num, bits) / den; }

}  // namespace

ResidueCoefficient residue_coefficient(const ZetaZero& zero, const PrecisionContext& ctx) {
  if (!zero.refined) {
    throw std::invalid_argument("residue coefficient needs a refined zero (t = " + zero.t.to_string(12) + ")");
  }
  const PrecisionContext wide = ctx.widened(kGuardBits);
  const Complex gamma = critical_point(zero.t.rounded(wide.bits()));
  const Complex numerator =
      complex_gamma(gamma, wide) * complex_zeta(gamma + 1, wide) * complex_zeta(gamma - 1, wide);
  const Complex c = numerator / zeta_derivative(gamma, wide);
  return {zero, c.rounded(ctx.bits())};
}

std::vector<ResidueCoefficient> residue_coefficients(std::span<const ZetaZero> zeros, std::size_t k,
                                                     const PrecisionContext& ctx) {
  if (k > zeros.size()) {
    throw std::out_of_range("requested " + std::to_string(k) + " zeros but only " + std::to_string(zeros.size()) +
                            " are available");
  }
  std::vector<ResidueCoefficient> out(k);
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(k, 1));
  std::vector<std::future<void>> tasks;
  for (std::size_t w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < k; i += workers) out[i] = residue_coefficient(zeros[i], ctx);
    }));
  }
  for (auto& task : tasks) task.get();
  return out;
}

std::string Scientific::to_string(int digits) const {
  return mantissa.to_string(digits) + "e" + std::to_string(exponent);
}

Scientific scientific_from_log(const Real& natural_log) {
  const Bits bits = natural_log.precision();
  const Real log10_value = natural_log / log(Real::from_int(10, bits));
  const Real exponent = floor(log10_value);
  const Real fraction = log10_value - exponent;
  Real mantissa = exp(fraction * log(Real::from_int(10, bits)));
  long e = exponent.to_long();
  // guard against the mantissa rounding up to exactly 10
  if (mantissa >= 10) {
    mantissa /= 10;
    ++e;
  }
  return {std::move(mantissa), e};
}

// ---------------------------------------------------------------- FirstZeroWave

FirstZeroWave::FirstZeroWave(const ResidueCoefficient& first, const Real& C, const PrecisionContext& ctx) {
  const Bits bits = ctx.bits();
  const Complex gamma = critical_point(first.zero.t.rounded(bits));
  exponent_ = gamma / 3;
  coefficient_ = first.c.rounded(bits) * exp(-(exponent_ * log(C.rounded(bits))));
  amplitude_ = abs(coefficient_) * 2;
  t_ = first.zero.t.rounded(bits);
}

Real FirstZeroWave::log_sample(const Real& x) const {
  if (x.sign() <= 0) throw std::invalid_argument("wave sample needs x > 0");
  const Complex w = coefficient_ * exp(exponent_ * log(x.rounded(t_.precision())));
  return w.re() * 2;
}

Real FirstZeroWave::envelope(const Real& x) const {
  return amplitude_ * exp(log(x.rounded(t_.precision())) / 6);
}

Real FirstZeroWave::log_period() const { return Real::pi(t_.precision()) * 6 / t_; }

// ---------------------------------------------------------------- AsymptoticModel

AsymptoticModel::AsymptoticModel(const PrecisionContext& ctx, std::vector<ResidueCoefficient> coefficients)
    : ctx_(ctx),
      coefficients_(std::move(coefficients)),
      C_(constant_C(ctx)),
      K_(constant_K(ctx)),
      log_C_(log(C_)),
      log_K_(log(K_)),
      cbrt_C_(cbrt(C_)) {}

void AsymptoticModel::require_zeros(std::size_t k) const {
  if (k > coefficients_.size()) {
    throw std::out_of_range("truncation k = " + std::to_string(k) + " exceeds the " +
                            std::to_string(coefficients_.size()) + " available residue coefficients");
  }
}

Real AsymptoticModel::saddle_tau(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument("saddle value needs n >= 1");
  return cbrt_C_ / cbrt(Real::from_uint(n, ctx_.bits()));
}

Real AsymptoticModel::log_leading(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument("leading estimate needs n >= 1");
  const Bits bits = ctx_.bits();
  const Real real_n = Real::from_uint(n, bits);
  const Real log_n = log(real_n);
  const Real n_two_thirds = exp(log_n * 2 / 3);
  return log_C_ / 9 + log_K_ - log(Real::pi(bits) * 6) / 2 - log_n * ratio(11, 18, bits) +
         cbrt_C_ * n_two_thirds * 3 / 2;
}

Complex AsymptoticModel::folded_zero_sum(const Real& tau, std::size_t k) const {
  require_zeros(k);
  const Bits bits = ctx_.bits();
  const Real log_tau = log(tau.rounded(bits));
  Complex sum(bits);
  for (std::size_t j = 0; j < k; ++j) {
    const ResidueCoefficient& rc = coefficients_[j];
    const Complex w = rc.c * exp(-(critical_point(rc.zero.t) * log_tau));
    sum += w;
    sum += conj(w);
  }
  return sum;
}

Real AsymptoticModel::oscillation(const Real& tau, std::size_t k) const { return folded_zero_sum(tau, k).re(); }

Real AsymptoticModel::oscillation_bound(const Real& tau, std::size_t first, std::size_t last) const {
  require_zeros(last);
  Real total(ctx_.bits());
  for (std::size_t j = first; j < last; ++j) total += abs(coefficients_[j].c) * 2;
  return total / sqrt(tau.rounded(ctx_.bits()));
}

AsymptoticBreakdown AsymptoticModel::full_estimate(std::uint64_t n, std::size_t k) const {
  Real tau = saddle_tau(n);
  Real oscillation_part = oscillation(tau, k);
  return {n, std::move(tau), log_leading(n), std::move(oscillation_part), k};
}

Real AsymptoticModel::log_variant(Variant variant, std::uint64_t n, std::size_t k) const {
  if (n == 0) throw std::invalid_argument("variant estimate needs n >= 1");
  const Bits bits = ctx_.bits();
  const Real log_six_pi = log(Real::pi(bits) * 6);
  switch (variant) {
    case Variant::Closed01: {
      // K / (sqrt(6 pi) C^{2/9}) n^{-5/18} exp(3/2 C^{1/3} n^{2/3} + sum g)
      const Real log_n = log(Real::from_uint(n, bits));
      return log_K_ - log_six_pi / 2 - log_C_ * ratio(2, 9, bits) - log_n * ratio(5, 18, bits) +
             cbrt_C_ * exp(log_n * 2 / 3) * 3 / 2 + oscillation(saddle_tau(n), k);
    }
    case Variant::HalfClosed:
    case Variant::SymmetricDoubled: {
      // K^{1/2} / (sqrt(6 pi) C^{7/36}) (2n)^{-11/36} exp(3/4 C^{1/3} (2n)^{2/3} + 1/2 sum g(C^{1/3} (2n)^{-1/3}))
      const Real log_2n = log(Real::from_uint(2 * n, bits));
      const Real tau = cbrt_C_ / exp(log_2n / 3);
      Real result = log_K_ / 2 - log_six_pi / 2 - log_C_ * ratio(7, 36, bits) - log_2n * ratio(11, 36, bits) +
                    cbrt_C_ * exp(log_2n * 2 / 3) * 3 / 4 + oscillation(tau, k) / 2;
      if (variant == Variant::SymmetricDoubled) result += Real::log2(bits);
      return result;
    }
  }
  throw std::invalid_argument("unknown variant");
}

LogfExpansion AsymptoticModel::logf_expansion(const Real& tau_in, std::size_t k) const {
  const Bits bits = ctx_.bits();
  const Bits wp = bits + kGuardBits;
  const Real tau = tau_in.rounded(wp);
  if (tau.sign() <= 0 || tau > 1) throw std::invalid_argument("log f check needs 0 < tau <= 1");
  require_zeros(k);

  // Terms behave like phi(n) e^{-n tau}; they drop below 2^-wp once n tau exceeds ~wp log 2 + log n.
  const double tau_d = tau.to_double();
  const double needed = (static_cast<double>(wp) * std::log(2.0) + 64.0) / tau_d * 1.25 + 64.0;
  if (needed > static_cast<double>(kMaxLogfTerms)) {
    throw TruncationError("log f direct sum at tau = " + tau.to_string(6) + " needs about " +
                          std::to_string(static_cast<long long>(needed)) + " terms; limit is " +
                          std::to_string(kMaxLogfTerms));
  }
  const std::size_t limit = static_cast<std::size_t>(needed);
  const std::vector<std::uint64_t> phi = totient_sieve(limit);

  const Real cutoff = ldexp(Real::from_int(1, wp), -static_cast<long>(wp));
  Real direct(wp);
  std::size_t terms = 0;
  bool converged = false;
  for (std::size_t n = 1; n <= limit; ++n) {
    const Real x = tau * static_cast<long>(n);
    // phi(n) * -log(1 - e^{-n tau})
    const Real term = -log1p(-exp(-x)) * static_cast<long>(phi[n]);
    direct += term;
    terms = n;
    if (x > 1 && term < cutoff * direct) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw TruncationError("log f direct sum at tau = " + tau.to_string(6) + " did not reach its cutoff");
  }

  // g_2 = (zeta(3)/zeta(2)) tau^-2 = (C/2) tau^-2;  g_0 = log K - log(tau)/6
  const Real g2 = C_.rounded(wp) / 2 / (tau * tau);
  const Real g0 = log_K_.rounded(wp) - log(tau) / 6;
  Real expansion = g2 + g0 + oscillation(tau, k).rounded(wp);
  Real residual = direct - expansion;
  return {direct.rounded(bits), expansion.rounded(bits), residual.rounded(bits), terms};
}

FirstZeroWave AsymptoticModel::first_zero_wave() const {
  require_zeros(1);
  return FirstZeroWave(coefficients_.front(), C_, ctx_);
}

// ---------------------------------------------------------------- free functions

namespace {

AsymptoticModel model_with(std::span<const ResidueCoefficient> coefficients, const PrecisionContext& ctx) {
  return AsymptoticModel(ctx, std::vector<ResidueCoefficient>(coefficients.begin(), coefficients.end()));
}

}  // namespace

Real log_leading_estimate(std::uint64_t n, const PrecisionContext& ctx) {
  return AsymptoticModel(ctx).log_leading(n);
}

Scientific leading_estimate(std::uint64_t n, const PrecisionContext& ctx) {
  return scientific_from_log(log_leading_estimate(n, ctx));
}

Real oscillation_sum(std::uint64_t n, std::span<const ResidueCoefficient> coefficients, std::size_t k,
                     const PrecisionContext& ctx) {
  const AsymptoticModel model = model_with(coefficients, ctx);
  return model.oscillation(model.saddle_tau(n), k);
}

AsymptoticBreakdown full_estimate(std::uint64_t n, std::span<const ResidueCoefficient> coefficients,
                                  std::size_t k, const PrecisionContext& ctx) {
  return model_with(coefficients, ctx).full_estimate(n, k);
}

Real variant_estimate(Variant variant, std::uint64_t n, std::span<const ResidueCoefficient> coefficients,
                      std::size_t k, const PrecisionContext& ctx) {
  return model_with(coefficients, ctx).log_variant(variant, n, k);
}

Real wave_sample(const Real& x, const PrecisionContext& ctx) {
  const std::vector<ZetaZero> seeds = load_zeros(bundled_zero_file(), ctx);
  if (seeds.empty()) throw IoError("bundled zero file is empty");
  const ZetaZero first = refine(seeds.front(), ctx);
  const AsymptoticModel model(ctx, {residue_coefficient(first, ctx)});
  return model.first_zero_wave().sample(x);
}

LogfExpansion logf_expansion_check(const Real& tau, std::span<const ResidueCoefficient> coefficients,
                                   std::size_t k, const PrecisionContext& ctx) {
  return model_with(coefficients, ctx).logf_expansion(tau, k);
}

}  // namespace npcount
