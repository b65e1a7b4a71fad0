#pragma once

#include <cstdint>

namespace vandervolt {

/// One splitmix64 step: advances the state by the golden gamma and returns
/// the mixed output. Used to derive substream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  std::uint64_t z = x + UINT64_C(0x9E3779B97F4A7C15);
  z = (z ^ (z >> 30)) * UINT64_C(0xBF58476D1CE4E5B9);
  z = (z ^ (z >> 27)) * UINT64_C(0x94D049BB133111EB);
  return z ^ (z >> 31);
}

/// xorshift64* generator: a 64-bit shift-register sequence with a
/// multiplicative output scramble. Deterministic across platforms.
class Xorshift64Star {
public:
  explicit Xorshift64Star(std::uint64_t seed) {
    state_ = splitmix64(seed);
    if (state_ == 0) state_ = UINT64_C(0x9E3779B97F4A7C15);
  }

  std::uint64_t next_u64() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * UINT64_C(2685821657736338717);
  }

  /// Uniform in [0, 1) with 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

private:
  std::uint64_t state_;
};

/// Per-trial substream: seed XOR trial index, passed through splitmix64 by
/// the generator's own seeding step. Trial k's stream is independent of how
/// many trials run.
inline Xorshift64Star substream(std::uint64_t seed, std::uint64_t index) {
  return Xorshift64Star(seed ^ index);
}

}  // namespace vandervolt
