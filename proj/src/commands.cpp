#include "npcount/commands.hpp"

#include <algorithm>
#include <future>
#include <string>
#include <thread>

#include "npcount/enumeration.hpp"
#include "npcount/special_functions.hpp"

namespace npcount {

CountRange parse_count_range(std::string_view name) {
  if (name == "half-open") return CountRange::HalfOpen;
  if (name == "closed") return CountRange::Closed;
  if (name == "half") return CountRange::Half;
  if (name == "symmetric") return CountRange::Symmetric;
  throw UsageError("unknown range '" + std::string(name) + "' (expected half-open, closed, half or symmetric)");
}

Table count_table(CountRange range, std::size_t max) {
  Table table({"n", "count"});
  std::vector<mpz_class> values;
  switch (range) {
    case CountRange::HalfOpen: {
      const CountSeries s = count_series(SlopeRange::HalfOpen01, max);
      values.assign(s.values().begin(), s.values().end());
      break;
    }
    case CountRange::Closed: {
      const CountSeries s = count_series(SlopeRange::Closed01, max);
      values.assign(s.values().begin(), s.values().end());
      break;
    }
    case CountRange::Half: {
      const CountSeries s = count_series(SlopeRange::Closed0Half, max);
      values.assign(s.values().begin(), s.values().end());
      break;
    }
    case CountRange::Symmetric:
      values = symmetric_count(max);
      break;
  }
  for (std::size_t n = 0; n < values.size(); ++n) {
    table.add_row({Cell::integer(static_cast<std::uint64_t>(n)), Cell::integer(values[n])});
  }
  return table;
}

Table rho_table(std::size_t max_height) {
  const RhoTable rho = rho_recurrence_table(max_height);
  Table table({"h", "d", "rho"});
  for (std::size_t h = 0; h <= max_height; ++h) {
    for (std::size_t d = 0; d <= h; ++d) {
      table.add_row({Cell::integer(static_cast<std::uint64_t>(h)), Cell::integer(static_cast<std::uint64_t>(d)),
                     Cell::integer(rho.at(static_cast<std::int64_t>(h), static_cast<std::int64_t>(d)))});
    }
  }
  return table;
}

std::vector<ResidueCoefficient> prepare_coefficients(const std::filesystem::path& zero_file, std::size_t k,
                                                     const PrecisionContext& ctx) {
  if (k == 0) return {};
  const std::vector<ZetaZero> seeds = load_zeros(zero_file, ctx);
  if (seeds.size() < k) {
    throw UsageError("truncation k = " + std::to_string(k) + " but " + zero_file.string() + " lists only " +
                     std::to_string(seeds.size()) + " zeros");
  }
  const std::vector<ZetaZero> refined = refine_all(std::span(seeds).first(k), ctx);
  return residue_coefficients(refined, k, ctx);
}

namespace {

Real log_of(const mpz_class& value, Bits bits) {
  Real r(bits);
  mpfr_set_z(r.get(), value.get_mpz_t(), MPFR_RNDN);
  return log(r);
}

}  // namespace

Table compare_table(std::span<const std::uint64_t> ns, const AsymptoticModel& model, std::size_t k) {
  Table table({"n", "log10_count", "log10_leading", "log10_full", "residual"});
  if (ns.empty()) return table;
  if (std::find(ns.begin(), ns.end(), 0) != ns.end()) throw UsageError("compare needs n >= 1");
  const std::uint64_t largest = *std::max_element(ns.begin(), ns.end());
  const CountSeries counts = count_series(SlopeRange::HalfOpen01, largest);

  const Bits bits = model.context().bits();
  const Real ln10 = log(Real::from_int(10, bits));
  for (const std::uint64_t n : ns) {
    const Real log_count = log_of(counts[n], bits);
    const AsymptoticBreakdown estimate = model.full_estimate(n, k);
    table.add_row({Cell::integer(n), Cell::floating(log_count / ln10), Cell::floating(estimate.log_main / ln10),
                   Cell::floating(estimate.log_estimate() / ln10), Cell::floating(log_count - estimate.log_main)});
  }
  return table;
}

Table wave_table(const FirstZeroWave& wave, const Real& xmin, const Real& xmax, std::size_t samples) {
  if (xmin.sign() <= 0 || xmax < xmin) throw UsageError("wave needs 0 < xmin <= xmax");
  if (samples == 0) throw UsageError("wave needs at least one sample");
  Table table({"x", "y", "log_y"});
  const Real log_min = log(xmin);
  const Real log_span = log(xmax) - log_min;
  for (std::size_t i = 0; i < samples; ++i) {
    const Real x = i == 0 ? xmin
                          : (i + 1 == samples ? xmax
                                              : exp(log_min + log_span * static_cast<long>(i) /
                                                                  static_cast<long>(samples - 1)));
    const Real log_y = wave.log_sample(x);
    table.add_row({Cell::floating(x), Cell::floating(exp(log_y)), Cell::floating(log_y)});
  }
  return table;
}

Table zeros_dump_table(std::span<const ZetaZero> zeros) {
  Table table({"index", "t"});
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    table.add_row({Cell::integer(static_cast<std::uint64_t>(i + 1)), Cell::floating(zeros[i].t)});
  }
  return table;
}

Table zeros_refine_table(std::span<const ZetaZero> seeds, const PrecisionContext& ctx) {
  std::vector<RefinementTrace> traces(seeds.size());
  std::vector<Complex> coefficients(seeds.size());
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(seeds.size(), 1));
  std::vector<std::future<void>> tasks;
  for (std::size_t w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < seeds.size(); i += workers) {
        traces[i] = refine_zero_traced(seeds[i].t, ctx);
        coefficients[i] = residue_coefficient({traces[i].t, true}, ctx).c;
      }
    }));
  }
  for (auto& task : tasks) task.get();

  Table table({"index", "t", "residual", "iterations", "c_re", "c_im"});
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    table.add_row({Cell::integer(static_cast<std::uint64_t>(i + 1)), Cell::floating(traces[i].t),
                   Cell::floating(traces[i].residuals.back()),
                   Cell::integer(static_cast<std::uint64_t>(traces[i].iterations)),
                   Cell::floating(coefficients[i].re()), Cell::floating(coefficients[i].im())});
  }
  return table;
}

Table logf_table(std::span<const Real> taus, const AsymptoticModel& model, std::size_t k) {
  Table table({"tau", "direct", "expansion", "residual", "terms"});
  for (const Real& tau : taus) {
    const LogfExpansion check = model.logf_expansion(tau, k);
    table.add_row({Cell::floating(tau), Cell::floating(check.direct), Cell::floating(check.expansion),
                   Cell::floating(check.residual), Cell::integer(static_cast<std::uint64_t>(check.terms))});
  }
  return table;
}

}  // namespace npcount
