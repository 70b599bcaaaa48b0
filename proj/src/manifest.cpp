// Copyright 2026 The iipad Authors
// SPDX-License-Identifier: Apache-2.0

#include "iipad/manifest.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

namespace iipad {
namespace {

constexpr const char* kHeader = "iipad-manifest v1";

std::vector<std::string> split_tab(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find('\t', start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

}  // namespace

Manifest load_manifest(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw DataError("manifest: cannot open " + file.string());

  Manifest m;
  m.root = file.has_parent_path() ? file.parent_path() : std::filesystem::path(".");

  std::string line;
  bool saw_header = false;
  std::unordered_set<std::string> seen_paths;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!saw_header) {
      if (line != kHeader)
        throw DataError("manifest: " + file.string() + " line " + std::to_string(lineno) +
                        ": expected header '" + kHeader + "'");
      saw_header = true;
      continue;
    }
    auto cols = split_tab(line);
    if (cols.size() != 4)
      throw DataError("manifest: " + file.string() + " line " + std::to_string(lineno) +
                      ": expected 4 tab-separated fields, got " + std::to_string(cols.size()));
    ManifestEntry e;
    e.subject = cols[0];
    e.session = cols[1];
    if (cols[2] == "bona_fide") {
      e.label = Label::kBonaFide;
    } else if (cols[2] == "attack") {
      e.label = Label::kAttack;
    } else {
      throw DataError("manifest: " + file.string() + " line " + std::to_string(lineno) +
                      ": unknown label '" + cols[2] + "'");
    }
    e.path = cols[3];
    if (e.subject.empty() || e.path.empty())
      throw DataError("manifest: " + file.string() + " line " + std::to_string(lineno) +
                      ": empty subject or path");
    if (std::filesystem::path(e.path).is_absolute())
      throw DataError("manifest: " + file.string() + " line " + std::to_string(lineno) +
                      ": path must be relative: " + e.path);
    if (!seen_paths.insert(e.path).second)
      throw DataError("manifest: " + file.string() + " line " + std::to_string(lineno) +
                      ": duplicate path " + e.path);
    m.entries.push_back(std::move(e));
  }
  if (!saw_header) throw DataError("manifest: " + file.string() + ": missing header line");
  return m;
}

void write_manifest(const std::filesystem::path& file,
                    const std::vector<ManifestEntry>& entries) {
  std::ofstream out(file, std::ios::trunc);
  if (!out) throw DataError("manifest: cannot create " + file.string());
  out << kHeader << "\n";
  for (const auto& e : entries) {
    out << e.subject << '\t' << e.session << '\t' << label_name(e.label) << '\t' << e.path
        << '\n';
  }
  if (!out) throw DataError("manifest: write failure " + file.string());
}

}  // namespace iipad
