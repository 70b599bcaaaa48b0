// Copyright 2026 The iipad Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef IIPAD_MANIFEST_HPP
#define IIPAD_MANIFEST_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "iipad/image.hpp"

namespace iipad {

// One video clip in a dataset listing.
struct ManifestEntry {
  std::string subject;
  std::string session;
  Label label = Label::kBonaFide;
  std::string path;  // directory of PNG frames, relative to the manifest file
};

struct Manifest {
  std::filesystem::path root;  // directory containing the manifest file
  std::vector<ManifestEntry> entries;
};

// Text format, one clip per line:
//
//   iipad-manifest v1
//   <subject_id> TAB <session> TAB <bona_fide|attack> TAB <relative_path>
//
// Blank lines and lines starting with '#' are skipped.  Duplicate paths,
// absolute paths, unknown labels, or a missing/never-matching header are
// DataErrors; entry order is preserved exactly as listed.
Manifest load_manifest(const std::filesystem::path& file);
void write_manifest(const std::filesystem::path& file, const std::vector<ManifestEntry>& entries);

}  // namespace iipad

#endif  // IIPAD_MANIFEST_HPP
