#pragma once

#include <cstdint>
#include <random>

namespace quasi {

using Rng = std::mt19937_64;

/// SplitMix64 finaliser; used to derive independent seeds from counters.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Counter-based seed derivation: seed(master, stream, index) =
/// mix64(mix64(master ^ mix64(stream)) + index). Trials can compute their
/// own seed without coordinating with each other.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                    std::uint64_t index) noexcept {
  return mix64(mix64(master ^ mix64(stream)) + index);
}

/// Uniform integer in [0, bound). Rejection sampling on the raw 64-bit
/// output so results do not depend on the standard library's distributions.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

/// Uniform integer in [lo, hi].
inline std::uint64_t uniform_between(Rng& rng, std::uint64_t lo,
                                     std::uint64_t hi) {
  return lo + uniform_below(rng, hi - lo + 1);
}

}  // namespace quasi
