/*
 * (C) Copyright 2026 planar-ar developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cmath>
#include <cstdint>

namespace planar_ar {

// Generator identity recorded in simulation metadata. Noise is drawn from
// splitmix64 streams (one stream per lattice row, derived from the user seed
// and the row index) and shaped with Box-Muller, so field generation is
// reproducible bit-for-bit for a given seed regardless of threading.
inline constexpr char kGeneratorId[] = "splitmix64-boxmuller-v1";

struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

/// Stream k of a seed: hash the seed once, offset by a odd multiplier of the
/// stream index, hash again. Distinct streams are (for practical purposes)
/// non-overlapping splitmix64 sequences.
inline SplitMix64 stream_rng(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 h{seed};
  std::uint64_t mixed = h.next() ^ (0xD1B54A32D192ED03ull * (stream + 1));
  SplitMix64 s{mixed};
  return SplitMix64{s.next()};
}

struct GaussianPair {
  double z0, z1;
};

inline GaussianPair box_muller(SplitMix64& rng) {
  double u1 = 1.0 - rng.uniform01();  // (0, 1]: keeps log() finite
  double u2 = rng.uniform01();
  double r = std::sqrt(-2.0 * std::log(u1));
  double t = 6.283185307179586 * u2;
  return {r * std::cos(t), r * std::sin(t)};
}

}  // namespace planar_ar
