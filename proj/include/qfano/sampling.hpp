#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "qfano/rational.hpp"

namespace qfano {

// Per-check seed: splitmix64 of (run seed xor FNV-1a of the check id).
std::uint64_t derive_seed(std::uint64_t seed, std::string_view id);

// Seeded source of small rationals. Uses raw engine output only, so the
// stream is identical across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  // Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  // Numerator in [-20, 20], denominator in {1..5}.
  Rational rational();
  Rational nonzero_rational();
  std::vector<Rational> rationals(std::size_t n);
  std::vector<Rational> integers(std::size_t n, std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 eng_;
};

}  // namespace qfano
