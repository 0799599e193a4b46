#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace hotstreak {

/// Seedable random stream with bit-portable output.
///
/// The engine is std::mt19937_64, which the C++ standard pins down
/// bit-exactly. All variate transforms are implemented here instead of
/// going through std::*_distribution, whose output is implementation
/// defined and would break cross-platform reproducibility of seeded runs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  bool bernoulli(double p) { return next_double() < p; }

  /// Exponential with the given mean (inverse CDF on a [0,1) uniform).
  double exponential(double mean);

  /// Poisson by Knuth's product-of-uniforms method; fine for the small
  /// means used here (shots per game).
  int poisson(double mean);

  /// Unbiased integer in [0, n) via rejection sampling.
  std::uint64_t below(std::uint64_t n);

  /// Fisher-Yates shuffle driven by below(), so the permutation stream is
  /// as portable as the engine.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Derives an independent sub-stream seed from (seed, stream index).
/// SplitMix64 finalizer; used to give each synthetic player its own stream.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace hotstreak
