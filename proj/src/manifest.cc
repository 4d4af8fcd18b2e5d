// Copyright 2026 The vqfusion Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vqf/manifest.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>

#include "text_util.h"
#include "vqf/errors.h"

namespace vqf {
namespace {

bool IsY4m(const std::filesystem::path& p) {
  auto ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".y4m";
}

std::string RowPrefix(std::size_t row) {
  return "manifest row " + std::to_string(row) + ": ";
}

int ParseDimension(const std::string& field, std::string_view name,
                   std::size_t row) {
  const double v = text::ParseDouble(field, name);
  if (v != std::floor(v) || v <= 0.0 || v > 1e6) {
    throw ConfigError(RowPrefix(row) + std::string(name) + " must be a positive integer");
  }
  return static_cast<int>(v);
}

}  // namespace

bool VideoSource::self_describing() const { return IsY4m(path); }

FrameSequence VideoSource::Load() const {
  if (!std::filesystem::exists(path)) {
    throw DecodeError("no such file: " + path.string());
  }
  return LoadVideo(path, format, width, height, frame_rate);
}

Manifest ReadManifest(std::istream& in, const std::filesystem::path& base_dir,
                      const ManifestOptions& options) {
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("manifest is empty (no header row)");
  const auto header = text::SplitCsvLine(line);
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < header.size(); ++i) col.emplace(header[i], i);

  std::vector<std::string> required = {"content_id", "ref_path", "dist_path",
                                       "width",      "height",   "pix_fmt",
                                       "fps"};
  if (options.require_mos) required.push_back("mos");
  if (options.require_grid) {
    required.push_back("resolution");
    required.push_back("crf");
  }
  for (const auto& name : required) {
    if (!col.count(name)) {
      throw ConfigError("manifest schema: missing required column '" + name + "'");
    }
  }

  Manifest manifest;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (text::Trim(line).empty()) continue;
    ++row;
    const auto fields = text::SplitCsvLine(line);
    if (fields.size() != header.size()) {
      throw ConfigError(RowPrefix(row) + "expected " + std::to_string(header.size()) +
                        " fields, found " + std::to_string(fields.size()));
    }
    auto get = [&](const std::string& name) -> std::string {
      auto it = col.find(name);
      return it == col.end() ? std::string() : fields[it->second];
    };
    auto number = [&](const std::string& name) -> std::optional<double> {
      const auto f = get(name);
      if (f.empty()) return std::nullopt;
      try {
        const double v = text::ParseDouble(f, name);
        if (!std::isfinite(v)) throw ConfigError("non-finite " + name);
        return v;
      } catch (const ConfigError& e) {
        throw ConfigError(RowPrefix(row) + e.what());
      }
    };

    ManifestRecord rec;
    rec.row = row;
    rec.content_id = get("content_id");
    if (rec.content_id.empty()) throw ConfigError(RowPrefix(row) + "empty content_id");
    for (const auto& [src, name] : {std::pair{&rec.ref, "ref_path"},
                                    std::pair{&rec.dist, "dist_path"}}) {
      const std::string p = get(name);
      if (p.empty()) throw ConfigError(RowPrefix(row) + "empty " + name);
      src->path = std::filesystem::path(p).is_absolute() ? std::filesystem::path(p)
                                                          : base_dir / p;
    }

    const bool both_y4m = rec.ref.self_describing() && rec.dist.self_describing();
    const auto fmt = get("pix_fmt");
    const auto w = get("width");
    const auto h = get("height");
    const auto fps = number("fps");
    if (!both_y4m && (fmt.empty() || w.empty() || h.empty() || !fps)) {
      throw ConfigError(RowPrefix(row) +
                        "headerless input needs width, height, pix_fmt and fps");
    }
    for (auto* src : {&rec.ref, &rec.dist}) {
      try {
        if (!fmt.empty()) src->format = ParsePixelFormat(fmt);
      } catch (const ConfigError& e) {
        throw ConfigError(RowPrefix(row) + e.what());
      }
      if (!w.empty()) src->width = ParseDimension(w, "width", row);
      if (!h.empty()) src->height = ParseDimension(h, "height", row);
      if (fps) {
        if (!(*fps > 0.0)) throw ConfigError(RowPrefix(row) + "fps must be positive");
        src->frame_rate = *fps;
      }
    }

    rec.mos = number("mos");
    if (options.require_mos && !rec.mos) {
      throw ConfigError(RowPrefix(row) + "empty mos");
    }
    rec.dataset = get("dataset");
    if (rec.dataset.empty()) rec.dataset = "default";
    rec.resolution = number("resolution");
    rec.crf = number("crf");
    if (options.require_grid && (!rec.resolution || !rec.crf)) {
      throw ConfigError(RowPrefix(row) + "empty resolution or crf");
    }
    manifest.records.push_back(std::move(rec));
  }
  return manifest;
}

Manifest LoadManifestFile(const std::filesystem::path& path,
                          const ManifestOptions& options) {
  std::ifstream in(path);
  if (!in) throw DecodeError("cannot open manifest " + path.string());
  return ReadManifest(in, path.parent_path(), options);
}

}  // namespace vqf
