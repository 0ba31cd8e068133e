#include "npcount/zeros.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <string>
#include <thread>

#include "npcount/errors.hpp"
#include "npcount/special_functions.hpp"

namespace npcount {

namespace {

constexpr int kMaxNewtonSteps = 60;

std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

}  // namespace

std::vector<ZetaZero> parse_zeros(std::istream& in, const PrecisionContext& ctx) {
  std::vector<ZetaZero> zeros;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view body = line;
    if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;
    Real t;
    try {
      t = Real::from_string(body, ctx.bits());
    } catch (const std::invalid_argument&) {
      throw ParseError(number, "expected a decimal number, got '" + std::string(body) + "'");
    }
    if (t.sign() <= 0) throw ParseError(number, "zero ordinates must be positive");
    if (!zeros.empty() && !(zeros.back().t < t)) {
      throw ParseError(number, "zero ordinates must be strictly increasing");
    }
    zeros.push_back({std::move(t), false});
  }
  return zeros;
}

std::vector<ZetaZero> load_zeros(const std::filesystem::path& path, const PrecisionContext& ctx) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open zero file " + path.string());
  return parse_zeros(in, ctx);
}

std::filesystem::path bundled_zero_file() {
  return std::filesystem::path(NPCOUNT_DATA_DIR) / "zeta_zeros_100.txt";
}

RefinementTrace refine_zero_traced(const Real& seed, const PrecisionContext& ctx) {
  const Bits bits = ctx.bits();
  const Real half = Real::from_double(0.5, bits);
  const Real tolerance = ldexp(Real::from_int(1, bits), 24 - ctx.bits());
  RefinementTrace trace{seed.rounded(bits), {}, 0};
  for (int step = 0; step <= kMaxNewtonSteps; ++step) {
    // F(t) = zeta(1/2 + i t), F'(t) = i zeta'(1/2 + i t)
    const ZetaValue z = zeta_with_derivative(Complex(half, trace.t), ctx);
    trace.residuals.push_back(abs(z.value));
    if (trace.residuals.back() <= tolerance) return trace;
    if (step == kMaxNewtonSteps) break;
    const Complex slope(-z.derivative.im(), z.derivative.re());
    trace.t -= (z.value / slope).re();
    trace.iterations = step + 1;
  }
  throw ConvergenceError("zero refinement from t = " + seed.to_string(12) + " did not converge in " +
                         std::to_string(kMaxNewtonSteps) + " iterations");
}

Real refine_zero(const Real& seed, const PrecisionContext& ctx) { return refine_zero_traced(seed, ctx).t; }

ZetaZero refine(const ZetaZero& zero, const PrecisionContext& ctx) { return {refine_zero(zero.t, ctx), true}; }

std::vector<ZetaZero> refine_all(std::span<const ZetaZero> zeros, const PrecisionContext& ctx) {
  std::vector<ZetaZero> out(zeros.size());
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(zeros.size(), 1));
  std::vector<std::future<void>> tasks;
  for (std::size_t w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < zeros.size(); i += workers) out[i] = refine(zeros[i], ctx);
    }));
  }
  for (auto& task : tasks) task.get();
  return out;
}

}  // namespace npcount
