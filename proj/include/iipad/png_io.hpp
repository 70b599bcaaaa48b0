// Copyright 2026 The iipad Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef IIPAD_PNG_IO_HPP
#define IIPAD_PNG_IO_HPP

#include <filesystem>

#include "iipad/image.hpp"

namespace iipad::pngio {

// Decode a PNG into an RGB frame with components in [0,1].  Grayscale and
// palette images are expanded to RGB, alpha is dropped, and 8- or 16-bit
// depths are scaled by 1/255 or 1/65535.  Throws DataError on missing or
// malformed files.
Frame read(const std::filesystem::path& path);

// Encode an RGB frame as 8-bit PNG, quantizing with round(v*255) after
// clamping to [0,1].  Output bytes depend only on the pixel data, which the
// reproducibility guarantees rely on.  Throws InvalidArgument for non-RGB
// input and DataError on I/O failure.
void write8(const std::filesystem::path& path, const Frame& rgb);

}  // namespace iipad::pngio

#endif  // IIPAD_PNG_IO_HPP
