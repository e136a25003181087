#pragma once

#include <cstdint>

namespace zeroloc {

/// SplitMix64: tiny deterministic generator with cheap substreams.
/// Unlike <random> distributions, its output is identical on every platform,
/// which is what makes seeded benchmark runs byte-reproducible.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  /// Substream for item `index` of a run seeded with `seed`; results do not
  /// depend on the order items are drawn in.
  static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed ^ 0x6a09e667f3bcc909ULL);
    g.state_ += 0x9e3779b97f4a7c15ULL * (index + 1);
    g.next_u64();
    return g;
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

 private:
  std::uint64_t state_;
};

}  // namespace zeroloc
