#pragma once

#include <cstdint>
#include <string_view>

namespace locopred {

// Deterministic PRNG with a fixed algorithm so that seeded runs reproduce
// bit-identically across builds and platforms (std:: distributions are
// implementation-defined and unsuitable for frozen logs).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1).
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform double in [lo, hi).
  double next_double(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

 private:
  std::uint64_t state_;
};

std::uint64_t fnv1a64(std::string_view data);

// Standard normal via Box-Muller on the deterministic stream.
double sample_normal(SplitMix64& rng);

// Gamma(shape, 1) via Marsaglia-Tsang squeeze.
double sample_gamma(SplitMix64& rng, double shape);

// Beta distribution parameterized by mean and concentration (alpha + beta).
// Returns values strictly inside (0, 1).
double sample_beta_mean(SplitMix64& rng, double mean, double concentration);

}  // namespace locopred
