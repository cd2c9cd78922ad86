#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace apm {

// splitmix64 finalizer; used to derive independent seeds from a master seed.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
  std::uint64_t s = mix64(master ^ 0x6a09e667f3bcc909ULL);
  s = mix64(s ^ mix64(a));
  s = mix64(s ^ mix64(b ^ 0xbb67ae8584caa73bULL));
  s = mix64(s ^ mix64(c ^ 0x3c6ef372fe94f82bULL));
  return s;
}

// The standard mandates mt19937_64's output sequence, so seeded draws are
// bit-identical across platforms. The distribution helpers below avoid
// std::uniform_*_distribution, whose mappings are implementation-defined.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n); n must be positive. Modulo bias is negligible
// for the small n used here and keeps the mapping trivially portable.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  return rng() % n;
}

// Box-Muller; consumes two draws per call.
inline double normal(Rng& rng, double mean = 0.0, double sd = 1.0) {
  double u1 = uniform01(rng);
  double u2 = uniform01(rng);
  if (u1 < 1e-300) u1 = 1e-300;
  double r = std::sqrt(-2.0 * std::log(u1));
  double z = r * std::cos(6.283185307179586476925286766559 * u2);
  return mean + sd * z;
}

}  // namespace apm
