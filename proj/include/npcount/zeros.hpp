// Non-trivial zeros of the Riemann zeta function, stored by their positive
// imaginary part t (the zero is 1/2 + i t; its conjugate is implicit).

#pragma once

#include <filesystem>
#include <istream>
#include <span>
#include <vector>

#include "npcount/precision.hpp"

namespace npcount {

struct ZetaZero {
  Real t;
  bool refined = false;
};

/// One decimal per line, '#' starts a comment, values strictly increasing.
/// Throws ParseError (with the 1-based line number) on bad or non-increasing input.
std::vector<ZetaZero> parse_zeros(std::istream& in, const PrecisionContext& ctx);

/// As parse_zeros; throws IoError if the file cannot be opened.
std::vector<ZetaZero> load_zeros(const std::filesystem::path& path, const PrecisionContext& ctx);

/// The seed catalog shipped with the library (first 100 zeros).
std::filesystem::path bundled_zero_file();

struct RefinementTrace {
  Real t;
  /// |zeta(1/2 + i t)| before each Newton step, and after the last one.
  std::vector<Real> residuals;
  int iterations = 0;
};

/// Newton iteration on t -> zeta(1/2 + i t) until |zeta| <= 2^(24 - bits).
/// Throws ConvergenceError after 60 iterations.
RefinementTrace refine_zero_traced(const Real& seed, const PrecisionContext& ctx);
Real refine_zero(const Real& seed, const PrecisionContext& ctx);
ZetaZero refine(const ZetaZero& zero, const PrecisionContext& ctx);

/// Refines every zero; independent zeros are processed concurrently.
std::vector<ZetaZero> refine_all(std::span<const ZetaZero> zeros, const PrecisionContext& ctx);

}  // namespace npcount
