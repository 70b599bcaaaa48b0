// Copyright 2026 The iipad Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef IIPAD_IMAGE_HPP
#define IIPAD_IMAGE_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "iipad/errors.hpp"

namespace iipad {

// Single-channel raster, row-major doubles.  Doubles everywhere on the image
// path: the decomposition works in log space where float rounding would leak
// into the reconstruction identity.
struct Plane {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Plane() = default;
  Plane(int r, int c, double fill = 0.0)
      : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, fill) {}

  double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
  std::size_t size() const { return data.size(); }
  bool same_shape(const Plane& o) const { return rows == o.rows && cols == o.cols; }
};

enum class ColorSpace { kRGB, kHSV, kYCbCr };

const char* color_space_name(ColorSpace cs);

// Three-channel frame.  Channel meaning depends on `space`; all values are
// expected in [0, 1] (H is stored as angle/360).
struct Frame {
  std::array<Plane, 3> ch;
  ColorSpace space = ColorSpace::kRGB;

  Frame() = default;
  Frame(int r, int c, ColorSpace s = ColorSpace::kRGB)
      : ch{Plane(r, c), Plane(r, c), Plane(r, c)}, space(s) {}

  int rows() const { return ch[0].rows; }
  int cols() const { return ch[0].cols; }
};

enum class Label { kBonaFide, kAttack };

inline const char* label_name(Label l) { return l == Label::kBonaFide ? "bona_fide" : "attack"; }

// A video clip after ingestion: fixed-length list of same-sized frames plus
// the identity bookkeeping the evaluation protocol needs.
struct FrameSequence {
  std::vector<Frame> frames;
  std::string subject;
  std::string session;
  Label label = Label::kBonaFide;
  std::string source;  // manifest-relative path, for error messages and cache keys

  int count() const { return static_cast<int>(frames.size()); }
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw InvalidArgument(msg);
}

}  // namespace iipad

#endif  // IIPAD_IMAGE_HPP
