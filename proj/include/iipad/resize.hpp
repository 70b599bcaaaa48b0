// Copyright 2026 The iipad Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef IIPAD_RESIZE_HPP
#define IIPAD_RESIZE_HPP

#include "iipad/image.hpp"

namespace iipad {

// Bilinear resample with half-pixel center alignment:
//   src = (dst + 0.5) * in/out - 0.5
// Sample coordinates are clamped to the valid range, so edges replicate.
// This is the common image-library convention (and what most video tooling
// produces), which keeps our cached features comparable to frames resized
// upstream.
Plane resize_bilinear(const Plane& in, int out_rows, int out_cols);
Frame resize_bilinear(const Frame& in, int out_rows, int out_cols);

}  // namespace iipad

#endif  // IIPAD_RESIZE_HPP
