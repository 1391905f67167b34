#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace ccsim {

// splitmix64 finalizer, used to derive independent substream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) { return mix64(a ^ mix64(b)); }

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return mix_seed(mix_seed(a, b), c);
}

// Deterministic RNG. All sampling goes through hand-rolled transforms so a
// given seed reproduces the same stream regardless of the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Unbiased uniform index in [0, n).
  std::size_t index(std::size_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return static_cast<std::size_t>(x % n);
  }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(index(static_cast<std::size_t>(hi - lo + 1)));
  }

  // Poisson count via exponential interarrivals; O(mean) but exact for the
  // desk-scale means used here.
  int poisson(double mean) {
    if (mean <= 0.0) return 0;
    double acc = 0.0;
    int count = -1;
    while (acc <= mean) {
      acc += -std::log(1.0 - uniform());
      ++count;
    }
    return count;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ccsim
