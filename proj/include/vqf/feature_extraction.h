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

#ifndef VQF_FEATURE_EXTRACTION_H_
#define VQF_FEATURE_EXTRACTION_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vqf/elementary_features.h"
#include "vqf/gsm_entropy.h"
#include "vqf/video_io.h"

namespace vqf {

// Bumped whenever a feature's numerics change; part of the cache key.
inline constexpr std::string_view kExtractorVersion = "vqf-features-1";

// Every per-frame feature in CSV column order.
const std::vector<std::string>& AllFeatureNames();

enum FeatureGroup : std::uint32_t {
  kGroupVif = 1u << 0,     // vif0..vif3
  kGroupDlm = 1u << 1,     // dlm
  kGroupTi = 1u << 2,      // ti
  kGroupTVif = 1u << 3,    // tvif0..tvif3
  kGroupSSpeed = 1u << 4,  // sspeed2..sspeed4
  kGroupTSpeed = 1u << 5,  // tspeed2..tspeed4
  kGroupAll = (1u << 6) - 1,
};

struct ExtractorConfig {
  std::uint32_t groups = kGroupAll;
  GsmParams gsm;
  VifParams vif;
  DlmParams dlm;
};

// Per-frame features, stored by column. Temporal columns are already padded
// at frame 0 with frame 1's value.
class FeatureTable {
 public:
  FeatureTable() = default;
  FeatureTable(std::vector<std::string> names, std::size_t frames);

  const std::vector<std::string>& names() const { return names_; }
  std::size_t num_frames() const { return frames_; }
  bool has(std::string_view name) const;

  // Throws ConfigError naming the column when absent.
  std::span<const double> column(std::string_view name) const;
  std::span<double> column(std::string_view name);

  double at(std::size_t frame, std::size_t col) const {
    return columns_[col][frame];
  }
  double& at(std::size_t frame, std::size_t col) { return columns_[col][frame]; }

  friend bool operator==(const FeatureTable&, const FeatureTable&) = default;

 private:
  std::size_t IndexOf(std::string_view name) const;

  std::vector<std::string> names_;
  std::size_t frames_ = 0;
  std::vector<std::vector<double>> columns_;
};

// Column names produced by a group mask, in canonical order.
std::vector<std::string> FeatureNamesFor(std::uint32_t groups);

// Per-frame extraction with frames distributed over OpenMP threads. Output
// is bit-identical to ExtractFeaturesSerial for any thread count.
FeatureTable ExtractFeatures(const FrameSequence& ref,
                             const FrameSequence& dist,
                             const ExtractorConfig& config = {});

// Single-threaded reference driver.
FeatureTable ExtractFeaturesSerial(const FrameSequence& ref,
                                   const FrameSequence& dist,
                                   const ExtractorConfig& config = {});

// CSV with a leading "frame" column; values use shortest round-trip text.
void WriteFeatureCsv(std::ostream& out, const FeatureTable& table);
FeatureTable ReadFeatureCsv(std::istream& in);

}  // namespace vqf

#endif  // VQF_FEATURE_EXTRACTION_H_
