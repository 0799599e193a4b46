#include "hotstreak/rng.hpp"

#include <cmath>

namespace hotstreak {

double Rng::exponential(double mean) {
  // 1 - u is in (0, 1], so the log is finite.
  return -mean * std::log(1.0 - next_double());
}

int Rng::poisson(double mean) {
  const double limit = std::exp(-mean);
  int k = 0;
  double prod = next_double();
  while (prod > limit) {
    ++k;
    prod *= next_double();
  }
  return k;
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n < 2) return 0;
  const std::uint64_t rem = std::uint64_t(-n) % n;  // 2^64 mod n
  for (;;) {
    std::uint64_t x = next_u64();
    if (x >= rem) return x % n;
  }
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace hotstreak
