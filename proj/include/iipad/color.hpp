// Copyright 2026 The iipad Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef IIPAD_COLOR_HPP
#define IIPAD_COLOR_HPP

#include <array>

#include "iipad/image.hpp"

namespace iipad::color {

// Pixel-level conversions, all on [0,1] components.  Hue is stored as
// angle/360 so every channel lives on the same scale.
std::array<double, 3> rgb_to_hsv(double r, double g, double b);
std::array<double, 3> rgb_to_ycbcr(double r, double g, double b);

// Whole-frame conversion.  Source must be RGB; converting to kRGB is the
// identity.  Conversions out of HSV/YCbCr are not part of the pipeline and
// are deliberately not provided.
Frame convert(const Frame& rgb, ColorSpace target);

// Scalar brightness channel used as the shading carrier:
//   RGB   -> (R+G+B)/3
//   HSV   -> V
//   YCbCr -> Y
Plane luminance(const Frame& f);

// Two chromaticity channels used to detect reflectance (albedo) variation.
// They are chosen to be insensitive to shading for a Lambertian surface:
//   RGB   -> rg-chromaticity (R/(R+G+B), G/(R+G+B)); achromatic fallback 1/3
//   HSV   -> (H, S)
//   YCbCr -> (Cb, Cr)
std::array<Plane, 2> chroma_planes(const Frame& f);

}  // namespace iipad::color

#endif  // IIPAD_COLOR_HPP
