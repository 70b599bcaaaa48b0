// Copyright 2026 The iipad Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef IIPAD_RNG_HPP
#define IIPAD_RNG_HPP

#include <cmath>
#include <cstdint>
#include <vector>

namespace iipad {

// Deterministic random source.  Every stochastic component in the pipeline
// (weight init, shuffles, the synthetic generator) draws from this generator
// rather than <random> distributions, because the standard library does not
// pin distribution algorithms and we require bit-identical runs regardless
// of toolchain.  The core is splitmix64, which is tiny, well studied, and
// has a convenient "split" operation for deriving independent substreams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).  53 mantissa bits, so the lattice step is 2^-53.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Standard normal via Box-Muller.  The second variate of each pair is
  // cached so consecutive calls consume bits at a fixed rate.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = next_double();
    double u2 = next_double();
    // Guard against log(0); pushing u1 to the smallest representable
    // positive lattice point keeps the map total without branching on
    // resampling (which would make the consumption rate data dependent).
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // Uniform integer in [0, n).  Rejection-free modulo would bias large n;
  // n here is always tiny (shuffle indices), so multiply-shift is exact
  // enough and keeps consumption at one draw per call.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(next_double() * static_cast<double>(n)) % n;
  }

  // Derive an independent substream.  Mixing the tag through the output
  // function decorrelates substreams that share a master seed.
  Rng split(std::uint64_t tag) const {
    Rng mixer(state_ ^ (0x9e3779b97f4a7c15ULL * (tag + 1)));
    return Rng(mixer.next_u64());
  }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Fisher-Yates shuffle driven by Rng, again to avoid std::shuffle's
// unspecified draw pattern.
template <typename T>
void deterministic_shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace iipad

#endif  // IIPAD_RNG_HPP
