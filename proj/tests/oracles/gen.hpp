#pragma once

#include <cstdint>
#include <random>

namespace gen {

// Seeded generator shared by the property tests.
struct Rng {
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng); }
  std::mt19937_64 eng;
};

}  // namespace gen
