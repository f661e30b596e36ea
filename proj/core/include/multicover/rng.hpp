#pragma once

#include <cstdint>

namespace multicover {

// SplitMix64. Small, fast and stable across platforms, which keeps generated
// corpora and Monte-Carlo trials byte-reproducible. Substreams are derived by
// mixing (seed, stream index), so parallel trials never share generator state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [lo, hi], inclusive. Rejection-free modulo is fine
  // here: ranges are tiny relative to 2^64, bias is far below any tolerance
  // in play, and determinism is what matters.
  std::uint64_t next_in(std::uint64_t lo, std::uint64_t hi) {
    return lo + next() % (hi - lo + 1);
  }

 private:
  std::uint64_t state_;
};

// Deterministic substream seed for (seed, index) pairs.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mix(seed ^ (0x5851f42d4c957f2dULL * (index + 1)));
  return mix.next();
}

}  // namespace multicover
