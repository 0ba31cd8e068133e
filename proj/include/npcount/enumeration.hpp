// Exact counts of Newton polygons.
//
// A Newton polygon is a multiset of segments (m, n) with gcd(m, n) = 1, read
// as edges of horizontal run m and rise n laid out in increasing slope order.
// Its height is the total run and its depth the total rise. For a slope range
// I the counts N_I(h) are the coefficients of
//
//     f_I(x) = prod_{m >= 1} (1 - x^m)^{-e(m)},   e(m) = #{n : n/m in I, gcd(m,n) = 1},
//
// and rho(h, d) refines N(h) by depth for slopes in [0, 1).

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace npcount {

enum class SlopeRange {
  HalfOpen01,   // [0, 1)
  Closed01,     // [0, 1]
  Closed0Half,  // [0, 1/2]
};

std::string_view to_string(SlopeRange range);

struct Segment {
  std::uint64_t run = 0;   // m
  std::uint64_t rise = 0;  // n

  /// Validating constructor; throws std::invalid_argument unless gcd(run, rise) = 1 and run >= 1.
  static Segment make(std::uint64_t run, std::uint64_t rise);

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Whether the slope rise/run lies in `range`.
bool admits(SlopeRange range, const Segment& segment);

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

class NewtonPolygon {
 public:
  /// Segments are validated and sorted by slope; input order is irrelevant.
  explicit NewtonPolygon(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const { return segments_; }
  std::uint64_t height() const { return height_; }
  std::uint64_t depth() const { return depth_; }

  /// Lower-convex breakpoints from (0,0) to (height, depth), one per segment end.
  std::vector<LatticePoint> breakpoints() const;

 private:
  std::vector<Segment> segments_;
  std::uint64_t height_ = 0;
  std::uint64_t depth_ = 0;
};

std::vector<LatticePoint> polygon_from_segments(std::vector<Segment> segments);

/// phi(0..n) with phi(0) = 0, by a linear sieve.
std::vector<std::uint64_t> totient_sieve(std::size_t n);

/// e(0..n) with e(0) = 0.
std::vector<std::uint64_t> segment_exponents(SlopeRange range, std::size_t n);

/// a(0..limit) for one slope range.
class CountSeries {
 public:
  CountSeries(SlopeRange range, std::vector<mpz_class> values);

  SlopeRange range() const { return range_; }
  std::size_t limit() const { return values_.size() - 1; }
  const mpz_class& operator[](std::size_t n) const { return values_[n]; }
  const mpz_class& at(std::size_t n) const { return values_.at(n); }
  std::span<const mpz_class> values() const { return values_; }

 private:
  SlopeRange range_;
  std::vector<mpz_class> values_;
};

/// Coefficients through x^limit via the log-derivative recurrence
/// n a(n) = sum_{k=1}^{n} b(k) a(n-k),  b(k) = sum_{d | k} d e(d).
/// Throws ConsistencyError if a division by n ever leaves a remainder.
CountSeries count_series(SlopeRange range, std::size_t limit);

/// Triangular table rho(h, d), 0 <= d <= h <= max_height, for slopes in [0, 1).
class RhoTable {
 public:
  explicit RhoTable(std::size_t max_height);

  std::size_t max_height() const { return rows_.size() - 1; }
  /// Zero outside 0 <= d <= h <= max_height.
  const mpz_class& at(std::int64_t h, std::int64_t d) const;
  mpz_class row_sum(std::size_t h) const;

 private:
  friend RhoTable rho_recurrence_table(std::size_t max_height);
  mpz_class& cell(std::size_t h, std::size_t d) { return rows_[h][d]; }

  std::vector<std::vector<mpz_class>> rows_;
};

/// Fills rho from rho(h,d) = sum_{h-d = a+c', d = b+c} rho(a,b) rho(c, c-c'),
/// with rho(h,0) = 1 and rho(h,d) = 0 for d >= max(1,h).
RhoTable rho_recurrence_table(std::size_t max_height);

using SegmentFilter = std::function<bool(const Segment&)>;

/// Counts multisets of admissible segments with total run h and total rise d
/// by a knapsack over the segment list ordered by (run, rise).
mpz_class rho_bruteforce(std::size_t h, std::size_t d, const SegmentFilter& admissible);
mpz_class rho_bruteforce(std::size_t h, std::size_t d, SlopeRange range);

/// N_sym(0..max_genus): symmetric polygons of height 2g. N_sym(0) = 1.
std::vector<mpz_class> symmetric_count(std::size_t max_genus);

}  // namespace npcount
