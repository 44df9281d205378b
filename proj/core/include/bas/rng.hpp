#pragma once

#include <cstdint>
#include <random>

namespace bas {

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

// Seed of run `index` in an experiment with base seed `base`. Stateless, so
// adding runs to an experiment never changes the streams of earlier runs.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept;

// Uniform double stream on top of std::mt19937_64. Doubles are built from the
// top 53 bits of the raw output, so sequences are reproducible bit for bit
// across platforms for a given seed.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1).
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform on [-1, 1).
  double uniform_symmetric() { return 2.0 * uniform01() - 1.0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bas
