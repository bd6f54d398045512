#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace netdist {

// Deterministic, platform-independent randomness. The standard distributions
// are implementation-defined, so uniform draws are built directly from the
// raw 64-bit stream.
class rng {
 public:
  explicit rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // Uniform in [0, n); unbiased via rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

 private:
  std::mt19937_64 engine_;
};

// Stable seed for a named substream, so drawing more from one purpose never
// perturbs another.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view purpose);

}  // namespace netdist
