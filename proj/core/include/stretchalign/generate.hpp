#pragma once

#include <cstdint>

#include "stretchalign/types.hpp"

namespace stretchalign {

// Deterministic 64-bit stream. State update: state += 0x9E3779B97F4A7C15;
// output mix: z ^= z >> 30, z *= 0xBF58476D1CE4E5B9, z ^= z >> 27,
// z *= 0x94D049BB133111EB, z ^= z >> 31. Identical output everywhere.
struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 significant bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

struct DistributionSpec {
  enum class Kind { gauss, uniform, rayleigh, poisson };

  Kind kind = Kind::uniform;
  double mean = 0.0;    // gauss
  double sigma = 1.0;   // gauss, rayleigh
  double lambda = 1.0;  // poisson
  std::int64_t lo = 0;  // uniform, inclusive bounds
  std::int64_t hi = 15;
  std::size_t length = 1;
  std::uint64_t seed = 0;

  static DistributionSpec gauss(double mean, double sigma, std::size_t length,
                                std::uint64_t seed);
  static DistributionSpec uniform(std::int64_t lo, std::int64_t hi, std::size_t length,
                                  std::uint64_t seed);
  static DistributionSpec rayleigh(double sigma, std::size_t length, std::uint64_t seed);
  static DistributionSpec poisson(double lambda, std::size_t length, std::uint64_t seed);
};

/// Draws spec.length values from the named distribution, rounds each half-up
/// to an integer and clamps it into [0, alphabet_size). Pure function of the
/// spec: the same seed reproduces the same sequence on any IEEE-754 platform
/// (the samplers use only +, *, /, sqrt and integer ops, no libm
/// transcendentals). Throws std::invalid_argument on bad parameters.
Sequence generate(const DistributionSpec& spec,
                  std::size_t alphabet_size = kDefaultAlphabetSize);

/// Same stream as generate, but any draw that would quantise to `excluded`
/// is redrawn, preserving the shape of the distribution on the remaining
/// support.
Sequence generate_excluding(const DistributionSpec& spec, Symbol excluded,
                            std::size_t alphabet_size = kDefaultAlphabetSize);

struct InsertionSpec {
  Symbol value = 0;
  std::size_t count = 0;
  std::size_t position = 0;  // 0 inserts at the front
  std::size_t truncate_to = 0;
};

/// Inserts count copies of value as one contiguous block at position, then
/// truncates the result to exactly truncate_to symbols.
Sequence corrupt(const Sequence& host, const InsertionSpec& ins);

}  // namespace stretchalign
