// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace mwcr {

/// Seedable, splittable 64-bit generator.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Uniform variates are built from raw engine bits rather than
/// std::uniform_real_distribution (whose algorithm is implementation-defined),
/// so a given seed produces bit-identical streams on every conforming
/// toolchain.
class Rng {
 public:
  using result_type = std::uint64_t;

  static constexpr std::string_view kAlgorithm = "mt19937_64+splitmix64";

  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix(seed)) {}

  std::uint64_t seed() const noexcept { return seed_; }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on the open interval (0, 1).
  double uniform_open() {
    for (;;) {
      const double u = uniform();
      if (u > 0.0) return u;
    }
  }

  /// Standard exponential variate.
  double exponential() { return -std::log(uniform_open()); }

  /// Uniform integer in [0, n), n > 0, by rejection (no modulo bias).
  std::uint64_t index(std::uint64_t n) {
    const std::uint64_t limit = max() - max() % n;
    for (;;) {
      const std::uint64_t x = engine_();
      if (x < limit) return x % n;
    }
  }

  bool coin() { return (engine_() >> 63) != 0; }

  /// Independent child stream; the same (seed, stream) pair always yields the
  /// same child.
  Rng split(std::uint64_t stream) const { return Rng(splitmix(seed_ ^ splitmix(stream + 1))); }

 private:
  static constexpr std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace mwcr
