#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace gsample {

using Rng = std::mt19937_64;

/// Uniform double on [0,1) built from the top 53 bits; independent of the
/// standard library's distribution implementation.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer on [0, n). n must be > 0. Lemire's nearly-divisionless method.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  std::uint64_t x = rng();
  unsigned __int128 m = static_cast<unsigned __int128>(x) * n;
  auto low = static_cast<std::uint64_t>(m);
  if (low < n) {
    const std::uint64_t threshold = -n % n;
    while (low < threshold) {
      x = rng();
      m = static_cast<unsigned __int128>(x) * n;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

inline bool bernoulli(Rng& rng, double p) { return uniform01(rng) < p; }

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Replica seed = splitmix64(splitmix64(master ^ fnv1a(tag)) + replica).
/// Fixed so that results do not depend on worker scheduling.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t replica, std::string_view tag) {
  return splitmix64(splitmix64(master ^ fnv1a(tag)) + replica);
}

}  // namespace gsample
