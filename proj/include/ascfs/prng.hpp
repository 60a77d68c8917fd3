#pragma once

#include <cmath>
#include <cstdint>

namespace ascfs::rng {

// Counter-based generator built on the splitmix64 finalizer. Every random
// decision in this project is a pure function of (seed, position), so results
// never depend on evaluation order or thread count.
//
// Bit-exact definition:
//   mix64(x): x ^= x >> 30; x *= 0xbf58476d1ce4e5b9; x ^= x >> 27;
//             x *= 0x94d049bb133111eb; x ^= x >> 31; return x
//   stream_at(seed, k) = mix64(seed + (k + 1) * 0x9e3779b97f4a7c15)
// A Bernoulli(p) draw at position k succeeds iff
//   (stream_at(seed, k) >> 11) < ceil(p * 2^53).

inline constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

constexpr std::uint64_t stream_at(std::uint64_t seed, std::uint64_t position) {
  return mix64(seed + (position + 1) * kGamma);
}

// Integer acceptance threshold for probability p in [0, 1]. p = 1 maps to
// 2^53, which every 53-bit draw is strictly below, so the edge is certain.
inline std::uint64_t acceptance_threshold(double p) {
  return static_cast<std::uint64_t>(std::ceil(p * 9007199254740992.0));
}

constexpr bool accept(std::uint64_t word, std::uint64_t threshold53) {
  return (word >> 11) < threshold53;
}

// Stateless combiner used to derive child seeds from labeled fields.
constexpr std::uint64_t combine(std::uint64_t h, std::uint64_t value) {
  return mix64(h ^ (value + kGamma));
}

}  // namespace ascfs::rng
