#pragma once

#include <cmath>
#include <cstdint>

#include "quatcomm/quaternion.hpp"

namespace quatcomm {

/// splitmix64 stream. Hand-rolled so sampled inputs (and therefore harness
/// reports) are reproducible bit-for-bit across platforms and standard
/// library versions.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

private:
  std::uint64_t state_;
};

/// Independent per-trial stream derived from (seed, index).
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mixer(seed ^ (0xD1B54A32D192ED03ull * (index + 1)));
  return SplitMix64(mixer.next());
}

/// Uniform double in [0, 1).
inline double next_unit(SplitMix64& rng) {
  return static_cast<double>(rng.next() >> 11) * 0x1.0p-53;
}

/// Standard normal via Box-Muller (log argument kept away from zero).
inline double next_normal(SplitMix64& rng) {
  const double u1 = next_unit(rng);
  const double u2 = next_unit(rng);
  const double two_pi = 6.283185307179586476925286766559;
  return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(two_pi * u2);
}

/// Uniform integer in [lo, hi], both inclusive.
inline std::int64_t next_int(SplitMix64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(rng.next() % span);
}

/// Small rational: numerator in [-bound, bound], denominator in [1, bound].
inline Rational next_rational(SplitMix64& rng, int bound = 9) {
  const std::int64_t num = next_int(rng, -bound, bound);
  const std::int64_t den = next_int(rng, 1, bound);
  return Rational(num, den);
}

inline Vector3<double> next_float_vector(SplitMix64& rng) {
  return {next_normal(rng), next_normal(rng), next_normal(rng)};
}

inline Vector3<Rational> next_exact_vector(SplitMix64& rng, int bound = 9) {
  Rational x = next_rational(rng, bound);
  Rational y = next_rational(rng, bound);
  Rational z = next_rational(rng, bound);
  return {x, y, z};
}

inline Quaternion<double> next_float_quaternion(SplitMix64& rng) {
  return {next_normal(rng), next_float_vector(rng)};
}

inline Quaternion<Rational> next_exact_quaternion(SplitMix64& rng, int bound = 9) {
  Rational re = next_rational(rng, bound);
  return {re, next_exact_vector(rng, bound)};
}

template <class S>
Quaternion<S> sample_quaternion(SplitMix64& rng, int bound = 9) {
  if constexpr (is_exact_v<S>) {
    return next_exact_quaternion(rng, bound);
  } else {
    (void)bound;
    return next_float_quaternion(rng);
  }
}

}  // namespace quatcomm
