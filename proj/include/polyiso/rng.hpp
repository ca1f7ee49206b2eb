//
// polyiso - Copyright 2026 The polyiso Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <stdexcept>

#include <gmpxx.h>

#include "polyiso/scaled.hpp"

namespace polyiso {

/// Counter-based generator: output k is a SplitMix64 finalizer applied to
/// (seed, stream, k). A run is reproducible from its seed alone, and
/// independent streams are cheap to derive (one per corpus entry).
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL))) { }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() { return mix(key_ + kGamma * ++counter_); }

  std::uint64_t draws() const noexcept { return counter_; }

  /// Uniform on [0, bound), bound > 0. Rejection sampling, no modulo bias.
  std::uint64_t uniform(std::uint64_t bound) {
    if (bound == 0)
      throw std::invalid_argument("CounterRng::uniform: empty range");
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t x;
    do {
      x = (*this)();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform on [0, bound) for arbitrary-precision bounds.
  mpz_class uniform(const mpz_class &bound) {
    if (bound <= 0)
      throw std::invalid_argument("CounterRng::uniform: empty range");
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    mpz_class x;
    do {
      x = 0;
      for (std::size_t w = 0; w < words; ++w) {
        x <<= 64;
        const std::uint64_t r = (*this)();
        x += mpz_class(static_cast<unsigned long>(r >> 32)) << 32;
        x += static_cast<unsigned long>(r & 0xffffffffULL);
      }
      // keep exactly `bits` low bits
      mpz_fdiv_r_2exp(x.get_mpz_t(), x.get_mpz_t(), bits);
    } while (x >= bound);
    return x;
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// A draw k / 10^N from the evaluation grid.
struct EpsilonSample {
  ScaledExact value;
  unsigned precision = 0;
};

/// Smallest admissible numerator for grid 10^N and floor delta.
inline mpz_class epsilon_lower_numerator(unsigned N, const ScaledExact &delta) {
  if (delta.sign() < 0 || delta >= ScaledExact(1))
    throw std::invalid_argument("sample_epsilon: floor must lie in [0, 1)");
  // ceil(delta * 10^N)
  const ScaledExact scaled = delta * ScaledExact(pow10(N));
  mpz_class lo;
  mpz_cdiv_q(lo.get_mpz_t(), scaled.mantissa().get_mpz_t(),
             pow10(scaled.scale()).get_mpz_t());
  return lo < 1 ? mpz_class(1) : lo;
}

/// Uniform over {k / 10^N : ceil(delta 10^N) <= k < 10^N, k >= 1}.
inline EpsilonSample sample_epsilon(CounterRng &rng, unsigned N,
                                    const ScaledExact &delta = ScaledExact(0)) {
  if (N == 0)
    throw std::invalid_argument("sample_epsilon: N must be at least 1");
  const mpz_class hi = pow10(N);
  const mpz_class lo = epsilon_lower_numerator(N, delta);
  if (lo >= hi)
    throw std::invalid_argument("sample_epsilon: empty sample space for floor "
                                + delta.to_string());
  const mpz_class k = lo + rng.uniform(mpz_class(hi - lo));
  return {ScaledExact(k, N), N};
}

}  // namespace polyiso
