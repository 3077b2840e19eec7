#pragma once

#include <cstdint>

#include "toric/arith.hpp"

namespace toric {

/// Deterministic 64-bit splittable generator (splitmix64). All sampling in
/// the library and the CLI goes through this so reports are reproducible
/// across platforms for a fixed seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(next_u64() % span);
  }

  /// Nonzero rational with numerator in [-9,9]\{0} and denominator in [1,9].
  Rat nonzero_rat() {
    long num = uniform(-9, 8);
    if (num >= 0) ++num;  // skip zero
    const long den = uniform(1, 9);
    return Rat(num, den);
  }

  /// Rational in the same range, zero allowed.
  Rat small_rat() {
    const long num = uniform(-9, 9);
    const long den = uniform(1, 9);
    return Rat(num, den);
  }

  Rng split() { return Rng(next_u64()); }

 private:
  std::uint64_t state_;
};

}  // namespace toric
