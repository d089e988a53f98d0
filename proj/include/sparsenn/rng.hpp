#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace sparsenn {

// Deterministic 64-bit generator (splitmix64, Vigna 2015, public domain).
// Standard-library distributions are implementation-defined, so every draw
// this library makes — weight init, shuffles, Gaussians — goes through this
// generator and the helpers below. A given (seed, stream) pair therefore
// yields the same values on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Unbiased-enough bounded draw via 128-bit multiply-shift (Lemire).
  std::uint64_t next_below(std::uint64_t n) {
    const auto wide = static_cast<unsigned __int128>(next_u64()) * n;
    return static_cast<std::uint64_t>(wide >> 64);
  }

  // Standard normal via Box-Muller; one value per call, nothing cached, so
  // the mapping from generator state to output stays trivial to reason about.
  double normal() {
    double u1 = next_double();
    double u2 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // Fisher-Yates, descending index, partner drawn with next_below(i + 1).
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

// Derives an independent seed for a named stream (epoch shuffles, weight
// init, data synthesis) from one experiment seed. Pure function of its
// arguments; documented so external tooling can reproduce the streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  Rng mixer(seed ^ (0xD1B54A32D192ED03ULL * (stream + 1)));
  return mixer.next_u64();
}

namespace streams {
inline constexpr std::uint64_t kWeightInit = 1;
inline constexpr std::uint64_t kEpochShuffleBase = 0x100;  // + epoch index
}  // namespace streams

}  // namespace sparsenn
