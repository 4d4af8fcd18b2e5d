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

#ifndef VQF_MANIFEST_H_
#define VQF_MANIFEST_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vqf/video_io.h"

namespace vqf {

// Where a video lives and how to decode it. Geometry is ignored for .y4m
// files, whose header is authoritative.
struct VideoSource {
  std::filesystem::path path;
  PixelFormat format = PixelFormat::kYuv420p8;
  int width = 0;
  int height = 0;
  double frame_rate = 0.0;

  FrameSequence Load() const;
  bool self_describing() const;
};

struct ManifestRecord {
  std::size_t row = 0;  // 1-based data row, header excluded
  std::string content_id;
  VideoSource ref;
  VideoSource dist;
  std::optional<double> mos;
  std::string dataset;  // "default" when the column is absent or empty
  std::optional<double> resolution;
  std::optional<double> crf;
};

struct Manifest {
  std::vector<ManifestRecord> records;
};

struct ManifestOptions {
  bool require_mos = false;
  bool require_grid = false;  // resolution and crf columns
};

// CSV with a header row. Required columns: content_id, ref_path, dist_path,
// width, height, pix_fmt, fps (plus mos / resolution, crf per options);
// optional: dataset. width, height, pix_fmt and fps may be left empty for
// .y4m inputs. Relative paths resolve against `base_dir`. A missing column
// raises ConfigError naming it; a bad row raises ConfigError naming the row.
Manifest ReadManifest(std::istream& in, const std::filesystem::path& base_dir,
                      const ManifestOptions& options = {});
Manifest LoadManifestFile(const std::filesystem::path& path,
                          const ManifestOptions& options = {});

}  // namespace vqf

#endif  // VQF_MANIFEST_H_
