// Copyright 2026 The iipad Authors
// SPDX-License-Identifier: Apache-2.0

#include "iipad/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

namespace iipad::fftutil {
namespace {

// FFTW plan creation is not thread-safe and (beyond FFTW_ESTIMATE) not
// deterministic, so plans are created once per shape under a lock with
// FFTW_ESTIMATE and then shared.  Execution via the fftw_execute_dft_*
// entry points with caller-owned buffers is thread-safe.
struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan inv = nullptr;
};

std::mutex g_plan_mutex;
std::map<std::pair<int, int>, PlanPair>& plan_cache() {
  static auto* cache = new std::map<std::pair<int, int>, PlanPair>();
  return *cache;
}

PlanPair plans_for(int rows, int cols) {
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  auto& cache = plan_cache();
  auto it = cache.find({rows, cols});
  if (it != cache.end()) return it->second;

  const int sc = cols / 2 + 1;
  double* rbuf = fftw_alloc_real(static_cast<std::size_t>(rows) * cols);
  fftw_complex* cbuf = fftw_alloc_complex(static_cast<std::size_t>(rows) * sc);
  PlanPair p;
  p.fwd = fftw_plan_dft_r2c_2d(rows, cols, rbuf, cbuf, FFTW_ESTIMATE);
  p.inv = fftw_plan_dft_c2r_2d(rows, cols, cbuf, rbuf, FFTW_ESTIMATE);
  fftw_free(rbuf);
  fftw_free(cbuf);
  if (!p.fwd || !p.inv) throw NumericError("fft: plan creation failed");
  cache[{rows, cols}] = p;
  return p;
}

struct FftwBuffers {
  double* real = nullptr;
  fftw_complex* cplx = nullptr;
  FftwBuffers(int rows, int cols) {
    real = fftw_alloc_real(static_cast<std::size_t>(rows) * cols);
    cplx = fftw_alloc_complex(static_cast<std::size_t>(rows) * (cols / 2 + 1));
  }
  ~FftwBuffers() {
    fftw_free(real);
    fftw_free(cplx);
  }
};

std::mutex g_mult_mutex;
using MultKey = std::tuple<int, int, double>;
std::map<MultKey, std::vector<double>>& mult_cache() {
  static auto* cache = new std::map<MultKey, std::vector<double>>();
  return *cache;
}

}  // namespace

Spectrum forward(const Plane& p) {
  require(p.rows > 0 && p.cols > 0, "fft: empty plane");
  PlanPair plans = plans_for(p.rows, p.cols);
  FftwBuffers buf(p.rows, p.cols);
  std::copy(p.data.begin(), p.data.end(), buf.real);
  fftw_execute_dft_r2c(plans.fwd, buf.real, buf.cplx);

  Spectrum s;
  s.rows = p.rows;
  s.cols = p.cols;
  const std::size_t n = static_cast<std::size_t>(p.rows) * s.spec_cols();
  s.data.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.data[i] = {buf.cplx[i][0], buf.cplx[i][1]};
  return s;
}

Plane inverse(const Spectrum& s) {
  require(s.rows > 0 && s.cols > 0, "fft: empty spectrum");
  PlanPair plans = plans_for(s.rows, s.cols);
  FftwBuffers buf(s.rows, s.cols);
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    buf.cplx[i][0] = s.data[i].real();
    buf.cplx[i][1] = s.data[i].imag();
  }
  fftw_execute_dft_c2r(plans.inv, buf.cplx, buf.real);

  Plane p(s.rows, s.cols);
  const double scale = 1.0 / (static_cast<double>(s.rows) * s.cols);
  const std::size_t m = p.size();
  for (std::size_t i = 0; i < m; ++i) p.data[i] = buf.real[i] * scale;
  return p;
}

const std::vector<double>& gaussian_multiplier(int rows, int cols, double sigma) {
  std::lock_guard<std::mutex> lock(g_mult_mutex);
  auto& cache = mult_cache();
  auto it = cache.find({rows, cols, sigma});
  if (it != cache.end()) return it->second;

  const int sc = cols / 2 + 1;
  std::vector<double> mult(static_cast<std::size_t>(rows) * sc);
  const double h = -0.5 * sigma * sigma;
  for (int r = 0; r < rows; ++r) {
    double wy = bin_freq(r, rows);
    for (int c = 0; c < sc; ++c) {
      double wx = bin_freq(c, cols);
      mult[static_cast<std::size_t>(r) * sc + c] = std::exp(h * (wx * wx + wy * wy));
    }
  }
  return cache.emplace(MultKey{rows, cols, sigma}, std::move(mult)).first->second;
}

void apply_multiplier(Spectrum& s, const std::vector<double>& mult) {
  require(mult.size() == s.size(), "fft: multiplier size mismatch");
  for (std::size_t i = 0; i < s.size(); ++i) s.data[i] *= mult[i];
}

Plane gaussian_blur(const Plane& p, double sigma) { return gaussian_blur(forward(p), sigma); }

Plane gaussian_blur(const Spectrum& s, double sigma) {
  Spectrum tmp = s;
  apply_multiplier(tmp, gaussian_multiplier(s.rows, s.cols, sigma));
  return inverse(tmp);
}

}  // namespace iipad::fftutil
