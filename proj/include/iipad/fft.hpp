// Copyright 2026 The iipad Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef IIPAD_FFT_HPP
#define IIPAD_FFT_HPP

#include <complex>
#include <vector>

#include "iipad/image.hpp"

namespace iipad::fftutil {

// Half-plane spectrum of a real image (FFTW r2c layout): rows x (cols/2+1)
// complex coefficients, row-major, unnormalized.  The redundant conjugate
// half is never materialized; every filter we apply is even-symmetric, so a
// real multiplier on the half plane is exactly equivalent to filtering the
// full spectrum.
struct Spectrum {
  int rows = 0;
  int cols = 0;  // spatial columns (not spectrum columns)
  std::vector<std::complex<double>> data;

  int spec_cols() const { return cols / 2 + 1; }
  std::size_t size() const { return data.size(); }
};

// Angular frequency of DFT bin `index` out of `n`, in radians per sample,
// mapped to (-pi, pi].
inline double bin_freq(int index, int n) {
  int k = index <= n / 2 ? index : index - n;
  return 2.0 * 3.141592653589793238462643383279502884 * static_cast<double>(k) /
         static_cast<double>(n);
}

Spectrum forward(const Plane& p);

// Inverse transform including the 1/(rows*cols) normalization, so
// inverse(forward(p)) == p up to rounding.
Plane inverse(const Spectrum& s);

// Pointwise real multiplier on the half-plane spectrum, length
// rows*(cols/2+1).  Gaussian multipliers implement periodic-boundary
// Gaussian blur: exp(-sigma^2 * (wx^2 + wy^2) / 2).  Multiplier tables are
// cached per (rows, cols, sigma).
const std::vector<double>& gaussian_multiplier(int rows, int cols, double sigma);

void apply_multiplier(Spectrum& s, const std::vector<double>& mult);

Plane gaussian_blur(const Plane& p, double sigma);

// Blur from an already-computed spectrum; saves the forward transform when
// several blur scales are applied to the same image.
Plane gaussian_blur(const Spectrum& s, double sigma);

}  // namespace iipad::fftutil

#endif  // IIPAD_FFT_HPP
