#pragma once

#include <random>
#include <string>

#include "npcount/precision.hpp"

namespace npcount::testing {

/// |a - b| / |b|, or |a - b| when b is zero.
inline Real relative_error(const Real& a, const Real& b) {
  const Real diff = abs(a - b);
  return b.is_zero() ? diff : diff / abs(b);
}

inline Real relative_error(const Complex& a, const Complex& b) {
  const Real diff = abs(a - b);
  const Real scale = abs(b);
  return scale.is_zero() ? diff : diff / scale;
}

/// 2^e at the given precision.
inline Real power_of_two(long e, Bits bits = 64) { return ldexp(Real::from_int(1, bits), e); }

inline Real parse(const std::string& text, Bits bits) { return Real::from_string(text, bits); }

inline Complex parse(const std::string& re, const std::string& im, Bits bits) {
  return Complex(parse(re, bits), parse(im, bits));
}

/// Deterministic generator for property tests.
inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed'2024ULL);
  return engine;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

}  // namespace npcount::testing
