#include "npcount/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "npcount/errors.hpp"

namespace npcount {

std::string_view to_string(SlopeRange range) {
  switch (range) {
    case SlopeRange::HalfOpen01:
      return "[0,1)";
    case SlopeRange::Closed01:
      return "[0,1]";
    case SlopeRange::Closed0Half:
      return "[0,1/2]";
  }
  return "?";
}

Segment Segment::make(std::uint64_t run, std::uint64_t rise) {
  if (run == 0 || std::gcd(run, rise) != 1) {
    throw std::invalid_argument("invalid segment (" + std::to_string(run) + "," + std::to_string(rise) +
                                "): need run >= 1 and gcd(run, rise) = 1");
  }
  return Segment{run, rise};
}

bool admits(SlopeRange range, const Segment& segment) {
  switch (range) {
    case SlopeRange::HalfOpen01:
      return segment.rise < segment.run;
    case SlopeRange::Closed01:
      return segment.rise <= segment.run;
    case SlopeRange::Closed0Half:
      return 2 * segment.rise <= segment.run;
  }
  return false;
}

// ---------------------------------------------------------------- polygons

NewtonPolygon::NewtonPolygon(std::vector<Segment> segments) : segments_(std::move(segments)) {
  for (const Segment& s : segments_) {
    Segment::make(s.run, s.rise);
    height_ += s.run;
    depth_ += s.rise;
  }
  // rise_a/run_a < rise_b/run_b, cross-multiplied; ties broken by run for a canonical order.
  std::sort(segments_.begin(), segments_.end(), [](const Segment& a, const Segment& b) {
    const unsigned __int128 lhs = static_cast<unsigned __int128>(a.rise) * b.run;
    const unsigned __int128 rhs = static_cast<unsigned __int128>(b.rise) * a.run;
    return lhs != rhs ? lhs < rhs : a.run < b.run;
  });
}

std::vector<LatticePoint> NewtonPolygon::breakpoints() const {
  std::vector<LatticePoint> points{{0, 0}};
  for (const Segment& s : segments_) {
    const LatticePoint& last = points.back();
    points.push_back({last.x + static_cast<std::int64_t>(s.run), last.y + static_cast<std::int64_t>(s.rise)});
  }
  return points;
}

std::vector<LatticePoint> polygon_from_segments(std::vector<Segment> segments) {
  return NewtonPolygon(std::move(segments)).breakpoints();
}

// ---------------------------------------------------------------- series

std::vector<std::uint64_t> totient_sieve(std::size_t n) {
  std::vector<std::uint64_t> phi(n + 1, 0);
  if (n >= 1) phi[1] = 1;
  std::vector<std::uint64_t> primes;
  std::vector<bool> composite(n + 1, false);
  for (std::size_t i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      phi[i] = i - 1;
    }
    for (const std::uint64_t p : primes) {
      const std::size_t multiple = i * p;
      if (multiple > n) break;
      composite[multiple] = true;
      if (i % p == 0) {
        phi[multiple] = phi[i] * p;
        break;
      }
      phi[multiple] = phi[i] * (p - 1);
    }
  }
  return phi;
}

std::vector<std::uint64_t> segment_exponents(SlopeRange range, std::size_t n) {
  std::vector<std::uint64_t> e = totient_sieve(n);
  switch (range) {
    case SlopeRange::HalfOpen01:
      break;
    case SlopeRange::Closed01:
      // (1,1) joins (1,0)
      if (n >= 1) e[1] = 2;
      break;
    case SlopeRange::Closed0Half:
      // slope 1/2 is admitted only through (2,1); otherwise n and m - n pair up
      for (std::size_t m = 3; m <= n; ++m) e[m] /= 2;
      break;
  }
  return e;
}

CountSeries::CountSeries(SlopeRange range, std::vector<mpz_class> values)
    : range_(range), values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("CountSeries needs at least a(0)");
}

CountSeries count_series(SlopeRange range, std::size_t limit) {
  const std::vector<std::uint64_t> e = segment_exponents(range, limit);

  std::vector<unsigned long> b(limit + 1, 0);
  for (std::size_t d = 1; d <= limit; ++d) {
    if (e[d] == 0) continue;
    const unsigned long weight = d * e[d];
    for (std::size_t k = d; k <= limit; k += d) {
      if (__builtin_add_overflow(b[k], weight, &b[k])) {
        throw std::overflow_error("divisor sum b(" + std::to_string(k) + ") exceeds 64 bits");
      }
    }
  }

  std::vector<mpz_class> a(limit + 1);
  a[0] = 1;
  mpz_class acc;
  for (std::size_t n = 1; n <= limit; ++n) {
    acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      mpz_addmul_ui(acc.get_mpz_t(), a[n - k].get_mpz_t(), b[k]);
    }
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), n)) {
      throw ConsistencyError("count_series: n a(n) not divisible by n at n = " + std::to_string(n));
    }
    mpz_divexact_ui(a[n].get_mpz_t(), acc.get_mpz_t(), n);
  }
  return CountSeries(range, std::move(a));
}

// ---------------------------------------------------------------- rho

namespace {

const mpz_class& zero_integer() {
  static const mpz_class zero(0);
  return zero;
}

}  // namespace

RhoTable::RhoTable(std::size_t max_height) : rows_(max_height + 1) {
  for (std::size_t h = 0; h <= max_height; ++h) rows_[h].assign(h + 1, mpz_class(0));
}

const mpz_class& RhoTable::at(std::int64_t h, std::int64_t d) const {
  if (h < 0 || d < 0 || d > h || static_cast<std::size_t>(h) >= rows_.size()) return zero_integer();
  return rows_[static_cast<std::size_t>(h)][static_cast<std::size_t>(d)];
}

mpz_class RhoTable::row_sum(std::size_t h) const {
  mpz_class sum(0);
  for (const mpz_class& v : rows_.at(h)) sum += v;
  return sum;
}

RhoTable rho_recurrence_table(std::size_t max_height) {
  RhoTable table(max_height);
  for (std::size_t h = 0; h <= max_height; ++h) {
    table.cell(h, 0) = 1;
    const auto height = static_cast<std::int64_t>(h);
    for (std::int64_t d = 1; d < height; ++d) {
      mpz_class sum(0);
      // alpha + delta = h - d, beta + gamma = d; every read is on a row < h.
      for (std::int64_t alpha = 0; alpha <= height - d; ++alpha) {
        const std::int64_t delta = height - d - alpha;
        for (std::int64_t beta = 0; beta <= std::min(alpha, d); ++beta) {
          const mpz_class& left = table.at(alpha, beta);
          if (left == 0) continue;
          const std::int64_t gamma = d - beta;
          const mpz_class& right = table.at(gamma, gamma - delta);
          if (right == 0) continue;
          mpz_addmul(sum.get_mpz_t(), left.get_mpz_t(), right.get_mpz_t());
        }
      }
      table.cell(h, static_cast<std::size_t>(d)) = std::move(sum);
    }
  }
  return table;
}

mpz_class rho_bruteforce(std::size_t h, std::size_t d, const SegmentFilter& admissible) {
  const std::size_t width = d + 1;
  std::vector<mpz_class> ways((h + 1) * width, mpz_class(0));
  ways[0] = 1;
  for (std::size_t m = 1; m <= h; ++m) {
    for (std::size_t n = 0; n <= d; ++n) {
      if (std::gcd(m, n) != 1) continue;
      const Segment segment{m, n};
      if (!admissible(segment)) continue;
      // ascending sweep = unbounded multiplicity of this segment
      for (std::size_t hh = m; hh <= h; ++hh) {
        for (std::size_t dd = n; dd <= d; ++dd) {
          ways[hh * width + dd] += ways[(hh - m) * width + (dd - n)];
        }
      }
    }
  }
  return ways[h * width + d];
}

mpz_class rho_bruteforce(std::size_t h, std::size_t d, SlopeRange range) {
  return rho_bruteforce(h, d, [range](const Segment& s) { return admits(range, s); });
}

std::vector<mpz_class> symmetric_count(std::size_t max_genus) {
  const CountSeries half = count_series(SlopeRange::Closed0Half, max_genus);
  std::vector<mpz_class> sym(max_genus + 1);
  sym[0] = half[0];
  for (std::size_t g = 1; g <= max_genus; ++g) sym[g] = half[g] + half[g - 1];
  return sym;
}

}  // namespace npcount
