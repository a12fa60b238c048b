#ifndef PGRO_RANDOM_HPP
#define PGRO_RANDOM_HPP

#include <cstdint>
#include <random>

namespace pgro {

/// mt19937_64's output sequence is fixed by the standard; the distributions
/// are not, so bounded draws go through `uniform_below` instead.
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent stream for one attempt of a multi-attempt run.
inline Rng stream_rng(std::uint64_t seed, std::uint64_t stream) {
  return Rng(splitmix64(seed ^ splitmix64(stream + 1)));
}

/// Uniform integer in [0, n); n > 0. Rejection sampling, no modulo bias.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

}  // namespace pgro

#endif  // PGRO_RANDOM_HPP
