// Copyright 2026 The iipad Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef IIPAD_PYRAMID_HPP
#define IIPAD_PYRAMID_HPP

#include <vector>

#include "iipad/fft.hpp"
#include "iipad/image.hpp"

namespace iipad::pyramid {

struct PyramidConfig {
  int scales = 3;
  int orientations = 4;
};

// Frequency-domain masks for the decomposition.  All masks are real, even
// symmetric, and stored on the r2c half plane.  They tile the spectrum so
// that high^2 + sum_{s,o} band^2 + low^2 == 1 at every bin, which makes the
// transform self-inverting: applying each mask twice and summing recovers
// the input exactly.
//
// Radial part: cumulative lowpass L_i(r) equals 1 below pi/2^(i+1), 0 above
// pi/2^i, with a raised-cosine transition in log2(r) between them.  Scale s
// covers sqrt(L_s^2 - L_{s+1}^2); the highpass residual is
// sqrt(1 - L_0^2) and the lowpass residual is L_S.
//
// Angular part: A_o(t) = beta * |cos(t - pi*o/K)|^(K-1) with beta chosen so
// that sum_o A_o^2 == 1 identically.
struct FilterBank {
  int rows = 0, cols = 0;
  int scales = 0, orientations = 0;
  std::vector<double> high;
  std::vector<std::vector<double>> band;  // scales*orientations masks, index s*K+o
  std::vector<double> low;

  const std::vector<double>& band_mask(int s, int o) const {
    return band[static_cast<std::size_t>(s) * orientations + o];
  }
};

// Cached per (rows, cols, scales, orientations).  Requires
// min(rows, cols) >= 2^(scales+2) so the lowest transition band spans at
// least one frequency bin; smaller images are an InvalidArgument.
const FilterBank& filter_bank(int rows, int cols, int scales, int orientations);

struct Pyramid {
  int rows = 0, cols = 0;
  int scales = 0, orientations = 0;
  Plane highpass;
  std::vector<Plane> bands;  // index s*orientations + o
  Plane lowpass;
  fftutil::Spectrum input_spectrum;  // kept so recombinations can skip re-transforms

  Plane& band(int s, int o) { return bands[static_cast<std::size_t>(s) * orientations + o]; }
  const Plane& band(int s, int o) const {
    return bands[static_cast<std::size_t>(s) * orientations + o];
  }
};

Pyramid build(const Plane& img, const PyramidConfig& cfg);

// Applies each subband's mask a second time in the frequency domain and
// sums, recovering the input of build() to floating-point accuracy.
Plane collapse(const Pyramid& p);

}  // namespace iipad::pyramid

#endif  // IIPAD_PYRAMID_HPP
