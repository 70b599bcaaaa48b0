// Copyright 2026 The iipad Authors
// SPDX-License-Identifier: Apache-2.0

#include "iipad/resize.hpp"

#include <algorithm>
#include <cmath>

namespace iipad {

Plane resize_bilinear(const Plane& in, int out_rows, int out_cols) {
  require(in.rows > 0 && in.cols > 0, "resize: empty input plane");
  require(out_rows > 0 && out_cols > 0, "resize: output size must be positive");
  if (in.rows == out_rows && in.cols == out_cols) return in;

  Plane out(out_rows, out_cols);
  const double sr = static_cast<double>(in.rows) / out_rows;
  const double sc = static_cast<double>(in.cols) / out_cols;
  for (int r = 0; r < out_rows; ++r) {
    double fy = (r + 0.5) * sr - 0.5;
    fy = std::clamp(fy, 0.0, static_cast<double>(in.rows - 1));
    int y0 = static_cast<int>(fy);
    int y1 = std::min(y0 + 1, in.rows - 1);
    double wy = fy - y0;
    for (int c = 0; c < out_cols; ++c) {
      double fx = (c + 0.5) * sc - 0.5;
      fx = std::clamp(fx, 0.0, static_cast<double>(in.cols - 1));
      int x0 = static_cast<int>(fx);
      int x1 = std::min(x0 + 1, in.cols - 1);
      double wx = fx - x0;
      double top = in.at(y0, x0) * (1.0 - wx) + in.at(y0, x1) * wx;
      double bot = in.at(y1, x0) * (1.0 - wx) + in.at(y1, x1) * wx;
      out.at(r, c) = top * (1.0 - wy) + bot * wy;
    }
  }
  return out;
}

Frame resize_bilinear(const Frame& in, int out_rows, int out_cols) {
  Frame out;
  out.space = in.space;
  for (int c = 0; c < 3; ++c) out.ch[c] = resize_bilinear(in.ch[c], out_rows, out_cols);
  return out;
}

}  // namespace iipad
