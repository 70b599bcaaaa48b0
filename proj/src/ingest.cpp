// Copyright 2026 The iipad Authors
// SPDX-License-Identifier: Apache-2.0

#include "iipad/ingest.hpp"

#include <algorithm>

#include "iipad/color.hpp"
#include "iipad/png_io.hpp"
#include "iipad/resize.hpp"

namespace iipad::ingest {

FrameSequence normalize_clip(std::vector<Frame> raw, const IngestConfig& cfg,
                             const std::string& origin) {
  require(cfg.frames > 0 && cfg.size > 0, "ingest: frames and size must be positive");
  if (static_cast<int>(raw.size()) < cfg.frames)
    throw DataError("ingest: " + origin + ": need " + std::to_string(cfg.frames) +
                    " frames, found " + std::to_string(raw.size()));

  FrameSequence seq;
  seq.source = origin;
  seq.frames.reserve(cfg.frames);
  for (int i = 0; i < cfg.frames; ++i) {
    Frame f = std::move(raw[i]);
    require(f.space == ColorSpace::kRGB, "ingest: " + origin + ": raw frames must be RGB");
    if (f.rows() != cfg.size || f.cols() != cfg.size)
      f = resize_bilinear(f, cfg.size, cfg.size);
    seq.frames.push_back(color::convert(f, cfg.space));
  }
  return seq;
}

std::vector<std::filesystem::path> list_frame_files(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec))
    throw DataError("ingest: not a directory: " + dir.string());

  std::vector<std::filesystem::path> files;
  for (const auto& de : std::filesystem::directory_iterator(dir)) {
    if (de.is_regular_file() && de.path().extension() == ".png") files.push_back(de.path());
  }
  if (files.empty()) throw DataError("ingest: no PNG frames in " + dir.string());
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
  return files;
}

FrameSequence load_sequence(const Manifest& m, const ManifestEntry& e, const IngestConfig& cfg) {
  auto files = list_frame_files(m.root / e.path);
  if (static_cast<int>(files.size()) < cfg.frames)
    throw DataError("ingest: " + e.path + ": need " + std::to_string(cfg.frames) +
                    " frames, found " + std::to_string(files.size()));

  std::vector<Frame> raw;
  raw.reserve(cfg.frames);
  for (int i = 0; i < cfg.frames; ++i) raw.push_back(pngio::read(files[i]));

  FrameSequence seq = normalize_clip(std::move(raw), cfg, e.path);
  seq.subject = e.subject;
  seq.session = e.session;
  seq.label = e.label;
  return seq;
}

}  // namespace iipad::ingest
