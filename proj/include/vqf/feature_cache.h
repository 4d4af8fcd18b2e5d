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

#ifndef VQF_FEATURE_CACHE_H_
#define VQF_FEATURE_CACHE_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "vqf/feature_extraction.h"
#include "vqf/manifest.h"

namespace vqf {

// Lowercase hex SHA-256 of a file's bytes / of a string.
std::string Sha256File(const std::filesystem::path& path);
std::string Sha256Hex(std::string_view data);

struct CachedFeatures {
  FeatureTable table;
  double frame_rate = 0.0;
};

// On-disk per-pair feature cache. Entries are keyed by the content hashes of
// both videos, the decode settings, the extractor version and every
// extraction parameter, so renamed or copied files still hit. Each entry
// carries a checksum of its table; a mismatch is reported and the entry is
// treated as absent.
class FeatureCache {
 public:
  explicit FeatureCache(std::filesystem::path dir, std::ostream* log = nullptr);

  static std::string Key(const VideoSource& ref, const VideoSource& dist,
                         const ExtractorConfig& config);

  std::optional<CachedFeatures> Lookup(const std::string& key) const;
  void Store(const std::string& key, const CachedFeatures& entry) const;

  std::filesystem::path EntryPath(const std::string& key) const;

 private:
  std::filesystem::path dir_;
  std::ostream* log_;
};

struct ExtractionResult {
  CachedFeatures features;
  bool cache_hit = false;
};

// Decodes and extracts, consulting `cache` first when given. A cache hit
// performs no decoding.
ExtractionResult ExtractPair(const VideoSource& ref, const VideoSource& dist,
                             const ExtractorConfig& config,
                             const FeatureCache* cache);

}  // namespace vqf

#endif  // VQF_FEATURE_CACHE_H_
