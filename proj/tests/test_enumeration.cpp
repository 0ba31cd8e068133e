#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "npcount/enumeration.hpp"

using namespace npcount;

namespace {

// Test-only oracle: multiply out prod (1 - x^m)^{-e(m)} one geometric factor at a time.
std::vector<mpz_class> direct_product(const std::vector<std::uint64_t>& exponents, std::size_t limit) {
  std::vector<mpz_class> a(limit + 1, mpz_class(0));
  a[0] = 1;
  for (std::size_t m = 1; m <= limit; ++m) {
    for (std::uint64_t rep = 0; rep < exponents[m]; ++rep) {
      for (std::size_t i = m; i <= limit; ++i) a[i] += a[i - m];
    }
  }
  return a;
}

// Coprime numerators with rise/run in the range, counted directly.
std::uint64_t coprime_count(SlopeRange range, std::uint64_t m) {
  std::uint64_t count = 0;
  for (std::uint64_t n = 0; n <= m; ++n) {
    if (std::gcd(m, n) == 1 && admits(range, Segment{m, n})) ++count;
  }
  return count;
}

// Symmetric polygons of height 2g: segment multisets with slopes in [0,1]
// that are invariant under (m, n) -> (m, m - n).
std::uint64_t symmetric_bruteforce(std::size_t g) {
  std::vector<Segment> segments;
  for (std::uint64_t m = 1; m <= 2 * g; ++m) {
    for (std::uint64_t n = 0; n <= m; ++n) {
      if (std::gcd(m, n) == 1) segments.push_back({m, n});
    }
  }
  std::uint64_t count = 0;
  std::vector<int> multiplicity(segments.size(), 0);
  std::function<void(std::size_t, std::uint64_t)> walk = [&](std::size_t i, std::uint64_t remaining) {
    if (remaining == 0) {
      for (std::size_t j = 0; j < segments.size(); ++j) {
        const Segment mirror{segments[j].run, segments[j].run - segments[j].rise};
        const auto k = static_cast<std::size_t>(
            std::find(segments.begin(), segments.end(), mirror) - segments.begin());
        if (multiplicity[j] != multiplicity[k]) return;
      }
      ++count;
      return;
    }
    if (i == segments.size()) return;
    for (std::uint64_t used = 0; used * segments[i].run <= remaining; ++used) {
      multiplicity[i] = static_cast<int>(used);
      walk(i + 1, remaining - used * segments[i].run);
    }
    multiplicity[i] = 0;
  };
  walk(0, 2 * g);
  return count;
}

}  // namespace

TEST_CASE("totient sieve") {
  const auto phi = totient_sieve(10'000);
  CHECK(phi[1] == 1);
  CHECK(phi[6] == 2);
  CHECK(phi[97] == 96);

  SUBCASE("matches a direct gcd count up to 1000") {
    std::uint64_t pairs = 0;
    for (std::uint64_t n = 1; n <= 1000; ++n) {
      std::uint64_t direct = 0;
      for (std::uint64_t k = 1; k <= n; ++k) direct += std::gcd(k, n) == 1;
      REQUIRE(phi[n] == direct);
      pairs += direct;
    }
    std::uint64_t summed = 0;
    for (std::uint64_t n = 1; n <= 1000; ++n) summed += phi[n];
    CHECK(summed == pairs);
  }

  SUBCASE("sum up to 10^4 is near 3 N^2 / pi^2") {
    double total = 0;
    for (std::size_t n = 1; n <= 10'000; ++n) total += static_cast<double>(phi[n]);
    const double expected = 3.0 / (M_PI * M_PI) * 1e8;
    CHECK(std::abs(total - expected) / expected < 1e-3);
  }
}

TEST_CASE("segment exponents") {
  CHECK(segment_exponents(SlopeRange::HalfOpen01, 5)[5] == 4);
  CHECK(segment_exponents(SlopeRange::Closed01, 5)[1] == 2);
  const auto half = segment_exponents(SlopeRange::Closed0Half, 4);
  CHECK(std::vector<std::uint64_t>(half.begin() + 1, half.end()) == std::vector<std::uint64_t>{1, 1, 1, 1});

  for (SlopeRange range : {SlopeRange::HalfOpen01, SlopeRange::Closed01, SlopeRange::Closed0Half}) {
    const auto e = segment_exponents(range, 300);
    for (std::uint64_t m = 1; m <= 300; ++m) REQUIRE(e[m] == coprime_count(range, m));
  }
}

TEST_CASE("segments and polygons") {
  CHECK_THROWS_AS(Segment::make(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(Segment::make(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(Segment::make(0, 0), std::invalid_argument);

  const std::vector<LatticePoint> expected{{0, 0}, {1, 0}, {3, 1}};
  CHECK(polygon_from_segments({Segment::make(1, 0), Segment::make(2, 1)}) == expected);
  CHECK(polygon_from_segments({}) == std::vector<LatticePoint>{{0, 0}});
  CHECK(polygon_from_segments({Segment::make(3, 1), Segment::make(1, 0)}) ==
        polygon_from_segments({Segment::make(1, 0), Segment::make(3, 1)}));
  CHECK_THROWS_AS(polygon_from_segments({Segment{4, 2}}), std::invalid_argument);

  const NewtonPolygon polygon({Segment::make(3, 2), Segment::make(1, 0), Segment::make(2, 1), Segment::make(3, 1)});
  CHECK(polygon.height() == 9);
  CHECK(polygon.depth() == 4);
  // slopes never decrease along the breakpoints (lower convexity)
  const auto points = polygon.breakpoints();
  for (std::size_t i = 2; i < points.size(); ++i) {
    const auto dx1 = points[i - 1].x - points[i - 2].x, dy1 = points[i - 1].y - points[i - 2].y;
    const auto dx2 = points[i].x - points[i - 1].x, dy2 = points[i].y - points[i - 1].y;
    CHECK(dy1 * dx2 <= dy2 * dx1);
  }
}

TEST_CASE("count_series golden values") {
  const CountSeries half_open = count_series(SlopeRange::HalfOpen01, 100);
  const std::vector<long> first{1, 1, 2, 4, 7, 13, 21, 37, 60, 98, 157};
  for (std::size_t n = 0; n < first.size(); ++n) CHECK(half_open[n] == first[n]);
  CHECK(half_open[100] == mpz_class("124156847482548"));

  const CountSeries closed = count_series(SlopeRange::Closed01, 5);
  const std::vector<long> partial{1, 2, 4, 8, 15, 28};
  for (std::size_t n = 0; n < partial.size(); ++n) CHECK(closed[n] == partial[n]);

  CHECK(count_series(SlopeRange::Closed0Half, 0)[0] == 1);
  CHECK(count_series(SlopeRange::HalfOpen01, 0).limit() == 0);
}

TEST_CASE("count_series equals the direct product for N <= 300") {
  for (SlopeRange range : {SlopeRange::HalfOpen01, SlopeRange::Closed01, SlopeRange::Closed0Half}) {
    const CountSeries series = count_series(range, 300);
    const auto expected = direct_product(segment_exponents(range, 300), 300);
    for (std::size_t n = 0; n <= 300; ++n) REQUIRE(series[n] == expected[n]);
  }
}

TEST_CASE("half-open counts are positive and non-decreasing") {
  const CountSeries series = count_series(SlopeRange::HalfOpen01, 400);
  CHECK(series[0] == 1);
  for (std::size_t n = 1; n <= 400; ++n) {
    REQUIRE(series[n] >= 1);
    REQUIRE(series[n] >= series[n - 1]);
  }
}

TEST_CASE("prefix-sum identity: [0,1] counts are partial sums of [0,1) counts") {
  const CountSeries half_open = count_series(SlopeRange::HalfOpen01, 200);
  const CountSeries closed = count_series(SlopeRange::Closed01, 200);
  mpz_class running(0);
  for (std::size_t n = 0; n <= 200; ++n) {
    running += half_open[n];
    REQUIRE(closed[n] == running);
  }
}

TEST_CASE("square identity: f_J^2 = (1-x)^-1 (1-x^2)^-1 f") {
  const std::size_t limit = 200;
  const CountSeries half = count_series(SlopeRange::Closed0Half, limit);
  const CountSeries full = count_series(SlopeRange::HalfOpen01, limit);
  std::vector<mpz_class> rhs(full.values().begin(), full.values().end());
  for (std::size_t i = 1; i <= limit; ++i) rhs[i] += rhs[i - 1];  // (1-x)^-1
  for (std::size_t i = 2; i <= limit; ++i) rhs[i] += rhs[i - 2];  // (1-x^2)^-1
  for (std::size_t n = 0; n <= limit; ++n) {
    mpz_class square(0);
    for (std::size_t k = 0; k <= n; ++k) square += half[k] * half[n - k];
    REQUIRE(square == rhs[n]);
  }
}

TEST_CASE("rho recurrence table") {
  const RhoTable table = rho_recurrence_table(15);
  CHECK(table.at(7, 4) == 7);
  CHECK(table.at(15, 6) == 212);
  CHECK(table.at(5, 5) == 0);
  CHECK(table.at(0, 0) == 1);
  CHECK(table.at(3, 1) == 2);
  CHECK(table.at(4, 7) == 0);
  CHECK(table.at(16, 0) == 0);
  CHECK(rho_recurrence_table(0).at(0, 0) == 1);
  for (std::int64_t h = 0; h <= 15; ++h) CHECK(table.at(h, 0) == 1);

  SUBCASE("row sums reproduce N(h)") {
    const RhoTable big = rho_recurrence_table(40);
    const CountSeries series = count_series(SlopeRange::HalfOpen01, 40);
    for (std::size_t h = 0; h <= 40; ++h) REQUIRE(big.row_sum(h) == series[h]);
  }
}

TEST_CASE("rho brute force") {
  CHECK(rho_bruteforce(3, 1, SlopeRange::HalfOpen01) == 2);
  for (std::size_t h = 0; h <= 20; ++h) CHECK(rho_bruteforce(h, 0, SlopeRange::HalfOpen01) == 1);

  SUBCASE("matches the recurrence on h <= 12") {
    const RhoTable table = rho_recurrence_table(12);
    for (std::int64_t h = 0; h <= 12; ++h) {
      for (std::int64_t d = 0; d <= h; ++d) {
        REQUIRE(table.at(h, d) == rho_bruteforce(h, d, SlopeRange::HalfOpen01));
      }
    }
  }

  SUBCASE("duality: counting with slopes in (0,1] reverses depth") {
    const SegmentFilter dual = [](const Segment& s) { return s.rise > 0 && s.rise <= s.run; };
    for (std::size_t h = 0; h <= 10; ++h) {
      for (std::size_t d = 0; d <= h; ++d) {
        REQUIRE(rho_bruteforce(h, h - d, dual) == rho_bruteforce(h, d, SlopeRange::HalfOpen01));
      }
    }
  }
}

TEST_CASE("symmetric counts") {
  const auto sym = symmetric_count(6);
  CHECK(sym[0] == 1);
  CHECK(sym[1] == 2);
  CHECK(sym[2] == 3);
  for (std::size_t g = 1; g <= 5; ++g) CHECK(sym[g] == symmetric_bruteforce(g));
}
