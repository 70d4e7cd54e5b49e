#include "qfano/sampling.hpp"

#include <stdexcept>

namespace qfano {

std::uint64_t derive_seed(std::uint64_t seed, std::string_view id) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : id) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::uint64_t z = (seed ^ h) + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t Sampler::integer(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("sampler: empty range");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(eng_() % span);
}

Rational Sampler::rational() {
  std::int64_t num = integer(-20, 20);
  std::int64_t den = integer(1, 5);
  return rat(num, den);
}

Rational Sampler::nonzero_rational() {
  Rational r;
  do r = rational();
  while (r == 0);
  return r;
}

std::vector<Rational> Sampler::rationals(std::size_t n) {
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(rational());
  return out;
}

std::vector<Rational> Sampler::integers(std::size_t n, std::int64_t lo, std::int64_t hi) {
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(Rational(static_cast<long>(integer(lo, hi))));
  return out;
}

}  // namespace qfano
