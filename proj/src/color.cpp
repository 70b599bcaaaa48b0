// Copyright 2026 The iipad Authors
// SPDX-License-Identifier: Apache-2.0

#include "iipad/color.hpp"

#include <algorithm>
#include <cmath>

namespace iipad {

const char* color_space_name(ColorSpace cs) {
  switch (cs) {
    case ColorSpace::kRGB: return "rgb";
    case ColorSpace::kHSV: return "hsv";
    case ColorSpace::kYCbCr: return "ycbcr";
  }
  return "?";
}

namespace color {

std::array<double, 3> rgb_to_hsv(double r, double g, double b) {
  double mx = std::max({r, g, b});
  double mn = std::min({r, g, b});
  double d = mx - mn;
  double v = mx;
  double s = mx > 0.0 ? d / mx : 0.0;
  double h = 0.0;
  if (d > 0.0) {
    if (mx == r) {
      h = (g - b) / d;
      if (h < 0.0) h += 6.0;
    } else if (mx == g) {
      h = (b - r) / d + 2.0;
    } else {
      h = (r - g) / d + 4.0;
    }
    h /= 6.0;  // angle/360
  }
  return {h, s, v};
}

std::array<double, 3> rgb_to_ycbcr(double r, double g, double b) {
  // BT.601 full-range, the JPEG variant: chroma offsets put the achromatic
  // axis at 0.5 so all components stay in [0,1].
  double y = 0.299 * r + 0.587 * g + 0.114 * b;
  double cb = 0.5 + (b - y) * (0.5 / (1.0 - 0.114));
  double cr = 0.5 + (r - y) * (0.5 / (1.0 - 0.299));
  return {y, cb, cr};
}

Frame convert(const Frame& rgb, ColorSpace target) {
  require(rgb.space == ColorSpace::kRGB, "color::convert: source frame must be RGB");
  if (target == ColorSpace::kRGB) return rgb;
  Frame out(rgb.rows(), rgb.cols(), target);
  const std::size_t n = rgb.ch[0].size();
  for (std::size_t i = 0; i < n; ++i) {
    std::array<double, 3> px;
    if (target == ColorSpace::kHSV) {
      px = rgb_to_hsv(rgb.ch[0].data[i], rgb.ch[1].data[i], rgb.ch[2].data[i]);
    } else {
      px = rgb_to_ycbcr(rgb.ch[0].data[i], rgb.ch[1].data[i], rgb.ch[2].data[i]);
    }
    out.ch[0].data[i] = px[0];
    out.ch[1].data[i] = px[1];
    out.ch[2].data[i] = px[2];
  }
  return out;
}

Plane luminance(const Frame& f) {
  Plane out(f.rows(), f.cols());
  const std::size_t n = out.size();
  switch (f.space) {
    case ColorSpace::kRGB:
      for (std::size_t i = 0; i < n; ++i)
        out.data[i] = (f.ch[0].data[i] + f.ch[1].data[i] + f.ch[2].data[i]) / 3.0;
      break;
    case ColorSpace::kHSV:
      out.data = f.ch[2].data;
      break;
    case ColorSpace::kYCbCr:
      out.data = f.ch[0].data;
      break;
  }
  return out;
}

std::array<Plane, 2> chroma_planes(const Frame& f) {
  std::array<Plane, 2> out{Plane(f.rows(), f.cols()), Plane(f.rows(), f.cols())};
  const std::size_t n = out[0].size();
  switch (f.space) {
    case ColorSpace::kRGB:
      for (std::size_t i = 0; i < n; ++i) {
        double sum = f.ch[0].data[i] + f.ch[1].data[i] + f.ch[2].data[i];
        if (sum > 1e-12) {
          out[0].data[i] = f.ch[0].data[i] / sum;
          out[1].data[i] = f.ch[1].data[i] / sum;
        } else {
          out[0].data[i] = out[1].data[i] = 1.0 / 3.0;
        }
      }
      break;
    case ColorSpace::kHSV:
      out[0].data = f.ch[0].data;
      out[1].data = f.ch[1].data;
      break;
    case ColorSpace::kYCbCr:
      out[0].data = f.ch[1].data;
      out[1].data = f.ch[2].data;
      break;
  }
  return out;
}

}  // namespace color
}  // namespace iipad
