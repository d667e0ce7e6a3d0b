#pragma once

#include <cstdint>

namespace mifs {

/// SplitMix64 (Steele, Lea and Flood): a Weyl counter stepped by
/// 0x9e3779b97f4a7c15 and passed through a fixed 64-bit finalizer. Every
/// seeded routine in the library draws from this generator so that results
/// are reproducible by any implementation of the same recurrence.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1): the top 53 bits scaled by 2^-53.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// lo + (hi - lo) * uniform().
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// floor(uniform() * n), for n >= 1.
  std::uint64_t below(std::uint64_t n) {
    const auto k = static_cast<std::uint64_t>(uniform() * static_cast<double>(n));
    return k < n ? k : n - 1;
  }

 private:
  std::uint64_t state_;
};

}  // namespace mifs
