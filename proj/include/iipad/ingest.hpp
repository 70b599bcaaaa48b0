// Copyright 2026 The iipad Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef IIPAD_INGEST_HPP
#define IIPAD_INGEST_HPP

#include <filesystem>
#include <vector>

#include "iipad/image.hpp"
#include "iipad/manifest.hpp"

namespace iipad::ingest {

struct IngestConfig {
  int frames = 75;  // frames kept per clip, taken from the head of the stream
  int size = 150;   // square side after resizing
  ColorSpace space = ColorSpace::kHSV;
};

// Normalize a raw decoded clip: keep the first `frames` frames, resize each
// to size x size, convert RGB to the working color space.  Fewer frames than
// requested is a DataError (`origin` names the clip in the message).
FrameSequence normalize_clip(std::vector<Frame> raw, const IngestConfig& cfg,
                             const std::string& origin);

// Frame files for a clip directory: all "*.png" directly inside it, in
// lexicographic filename order.  Missing or empty directories are DataErrors.
std::vector<std::filesystem::path> list_frame_files(const std::filesystem::path& dir);

// Load one manifest entry from disk and normalize it.  Only the first
// cfg.frames files are decoded.
FrameSequence load_sequence(const Manifest& m, const ManifestEntry& e, const IngestConfig& cfg);

}  // namespace iipad::ingest

#endif  // IIPAD_INGEST_HPP
