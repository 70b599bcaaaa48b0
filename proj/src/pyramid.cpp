// Copyright 2026 The iipad Authors
// SPDX-License-Identifier: Apache-2.0

#include "iipad/pyramid.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace iipad::pyramid {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Raised-cosine cumulative lowpass: 1 for r <= cutoff/2, 0 for r >= cutoff,
// cos((pi/2) * log2(2r/cutoff)) in between.
double radial_lowpass(double r, double cutoff) {
  if (r <= cutoff * 0.5) return 1.0;
  if (r >= cutoff) return 0.0;
  return std::cos(0.5 * kPi * std::log2(2.0 * r / cutoff));
}

double binomial(int n, int k) {
  double v = 1.0;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

FilterBank make_bank(int rows, int cols, int scales, int orients) {
  FilterBank fb;
  fb.rows = rows;
  fb.cols = cols;
  fb.scales = scales;
  fb.orientations = orients;

  const int sc = cols / 2 + 1;
  const std::size_t n = static_cast<std::size_t>(rows) * sc;
  fb.high.resize(n);
  fb.low.resize(n);
  fb.band.assign(static_cast<std::size_t>(scales) * orients, std::vector<double>(n));

  // Normalizer making sum_o A_o^2 == 1; follows from the binomial expansion
  // of cos^(2K-2) summed over K orientations spaced pi/K apart.
  const int K = orients;
  const double beta =
      std::sqrt(std::pow(2.0, 2 * K - 2) / (K * binomial(2 * K - 2, K - 1)));

  std::vector<double> cum(static_cast<std::size_t>(scales) + 1);
  for (int r = 0; r < rows; ++r) {
    const double wy = fftutil::bin_freq(r, rows);
    for (int c = 0; c < sc; ++c) {
      const double wx = fftutil::bin_freq(c, cols);
      const double rad = std::hypot(wx, wy);
      const double theta = std::atan2(wy, wx);
      const std::size_t idx = static_cast<std::size_t>(r) * sc + c;

      for (int s = 0; s <= scales; ++s) cum[s] = radial_lowpass(rad, kPi / (1 << s));
      fb.high[idx] = std::sqrt(std::max(0.0, 1.0 - cum[0] * cum[0]));
      fb.low[idx] = cum[scales];

      for (int s = 0; s < scales; ++s) {
        const double ring =
            std::sqrt(std::max(0.0, cum[s] * cum[s] - cum[s + 1] * cum[s + 1]));
        for (int o = 0; o < K; ++o) {
          const double ang = beta * std::pow(std::abs(std::cos(theta - kPi * o / K)), K - 1);
          fb.band[static_cast<std::size_t>(s) * K + o][idx] = ring * ang;
        }
      }
    }
  }
  return fb;
}

std::mutex g_bank_mutex;
using BankKey = std::tuple<int, int, int, int>;

}  // namespace

const FilterBank& filter_bank(int rows, int cols, int scales, int orientations) {
  require(scales >= 1 && orientations >= 1,
          "pyramid: scales and orientations must be positive");
  const int min_dim = rows < cols ? rows : cols;
  if (min_dim < (1 << (scales + 2)))
    throw InvalidArgument("pyramid: image side " + std::to_string(min_dim) +
                          " too small for " + std::to_string(scales) +
                          " scales (need >= " + std::to_string(1 << (scales + 2)) + ")");

  static auto* cache = new std::map<BankKey, FilterBank>();
  std::lock_guard<std::mutex> lock(g_bank_mutex);
  BankKey key{rows, cols, scales, orientations};
  auto it = cache->find(key);
  if (it == cache->end())
    it = cache->emplace(key, make_bank(rows, cols, scales, orientations)).first;
  return it->second;
}

Pyramid build(const Plane& img, const PyramidConfig& cfg) {
  const FilterBank& fb = filter_bank(img.rows, img.cols, cfg.scales, cfg.orientations);

  Pyramid p;
  p.rows = img.rows;
  p.cols = img.cols;
  p.scales = cfg.scales;
  p.orientations = cfg.orientations;
  p.input_spectrum = fftutil::forward(img);

  auto filtered = [&](const std::vector<double>& mask) {
    fftutil::Spectrum s = p.input_spectrum;
    fftutil::apply_multiplier(s, mask);
    return fftutil::inverse(s);
  };

  p.highpass = filtered(fb.high);
  p.bands.reserve(fb.band.size());
  for (const auto& m : fb.band) p.bands.push_back(filtered(m));
  p.lowpass = filtered(fb.low);
  return p;
}

Plane collapse(const Pyramid& p) {
  require(!p.bands.empty(), "pyramid: collapse of empty pyramid");
  const FilterBank& fb = filter_bank(p.rows, p.cols, p.scales, p.orientations);

  fftutil::Spectrum acc;
  acc.rows = p.rows;
  acc.cols = p.cols;
  acc.data.assign(static_cast<std::size_t>(p.rows) * acc.spec_cols(), {0.0, 0.0});

  auto add = [&](const Plane& plane, const std::vector<double>& mask) {
    require(plane.rows == p.rows && plane.cols == p.cols,
            "pyramid: collapse with mismatched band shape");
    fftutil::Spectrum s = fftutil::forward(plane);
    for (std::size_t i = 0; i < acc.size(); ++i) acc.data[i] += s.data[i] * mask[i];
  };

  add(p.highpass, fb.high);
  for (int s = 0; s < p.scales; ++s)
    for (int o = 0; o < p.orientations; ++o)
      add(p.band(s, o), fb.band_mask(s, o));
  add(p.lowpass, fb.low);
  return fftutil::inverse(acc);
}

}  // namespace iipad::pyramid
