// The computations behind each `npcount` subcommand, returning tables so
// they can be driven from tests as well as from the command line.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "npcount/asymptotics.hpp"
#include "npcount/report.hpp"
#include "npcount/zeros.hpp"

namespace npcount {

/// Bad command-line input detected after parsing (exit code 2).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ExitCode : int {
  kSuccess = 0,
  kUsage = 2,
  kNumeric = 3,
  kIo = 4,
};

/// Range names accepted by `count --range`.
enum class CountRange { HalfOpen, Closed, Half, Symmetric };
CountRange parse_count_range(std::string_view name);

/// Columns n,count for n = 0..max.
Table count_table(CountRange range, std::size_t max);

/// Columns h,d,rho for 0 <= d <= h <= max_height.
Table rho_table(std::size_t max_height);

/// Refines the first k zeros of the catalog and evaluates their residue coefficients.
std::vector<ResidueCoefficient> prepare_coefficients(const std::filesystem::path& zero_file, std::size_t k,
                                                     const PrecisionContext& ctx);

/// Columns n,log10_count,log10_leading,log10_full,residual; residual is log N(n) - log P(n).
Table compare_table(std::span<const std::uint64_t> ns, const AsymptoticModel& model, std::size_t k);

/// Columns x,y,log_y on `samples` log-spaced points of [xmin, xmax].
Table wave_table(const FirstZeroWave& wave, const Real& xmin, const Real& xmax, std::size_t samples);

/// Columns index,t.
Table zeros_dump_table(std::span<const ZetaZero> zeros);

/// Columns index,t,residual,iterations,c_re,c_im for each refined seed.
Table zeros_refine_table(std::span<const ZetaZero> seeds, const PrecisionContext& ctx);

/// Columns tau,direct,expansion,residual,terms.
Table logf_table(std::span<const Real> taus, const AsymptoticModel& model, std::size_t k);

}  // namespace npcount
