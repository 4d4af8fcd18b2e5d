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

#include "vqf/feature_cache.h"

#include <array>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include <openssl/evp.h>

#include "text_util.h"
#include "vqf/errors.h"

namespace vqf {
namespace {

constexpr std::string_view kCacheMagic = "vqfusion-feature-cache 1";

class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new(), EVP_MD_CTX_free) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1) {
      throw Error("SHA-256 initialization failed");
    }
  }
  void Update(const void* data, std::size_t n) {
    EVP_DigestUpdate(ctx_.get(), data, n);
  }
  std::string HexDigest() {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx_.get(), md.data(), &len);
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
      out += kHex[md[i] >> 4];
      out += kHex[md[i] & 15];
    }
    return out;
  }

 private:
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

std::string SourceKey(const VideoSource& src) {
  std::string key = Sha256File(src.path);
  if (!src.self_describing()) {
    key += ":" + std::string(PixelFormatName(src.format)) + ":" +
           std::to_string(src.width) + "x" + std::to_string(src.height) + "@" +
           text::FormatDouble(src.frame_rate);
  }
  return key;
}

}  // namespace

std::string Sha256File(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DecodeError("cannot open " + path.string());
  Sha256 h;
  std::array<char, 1 << 16> buf;
  while (in) {
    in.read(buf.data(), buf.size());
    h.Update(buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  if (in.bad()) throw DecodeError("read failed for " + path.string());
  return h.HexDigest();
}

std::string Sha256Hex(std::string_view data) {
  Sha256 h;
  h.Update(data.data(), data.size());
  return h.HexDigest();
}

FeatureCache::FeatureCache(std::filesystem::path dir, std::ostream* log)
    : dir_(std::move(dir)), log_(log) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw DecodeError("cannot create cache directory " + dir_.string());
}

std::string FeatureCache::Key(const VideoSource& ref, const VideoSource& dist,
                              const ExtractorConfig& config) {
  std::ostringstream k;
  k << kExtractorVersion << ";ref=" << SourceKey(ref) << ";dist=" << SourceKey(dist)
    << ";groups=" << config.groups << ";b=" << config.gsm.block_size
    << ";sw2=" << text::FormatDouble(config.gsm.noise_variance)
    << ";vif=" << text::FormatDouble(config.vif.sigma0) << ","
    << text::FormatDouble(config.vif.min_sigma) << ","
    << text::FormatDouble(config.vif.sensor_noise) << ","
    << text::FormatDouble(config.vif.epsilon) << ";dlm=";
  for (double w : config.dlm.level_weights) k << text::FormatDouble(w) << ",";
  return k.str();
}

std::filesystem::path FeatureCache::EntryPath(const std::string& key) const {
  return dir_ / (Sha256Hex(key) + ".csv");
}

std::optional<CachedFeatures> FeatureCache::Lookup(const std::string& key) const {
  const auto path = EntryPath(key);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  auto warn = [&](const std::string& why) -> std::optional<CachedFeatures> {
    if (log_) *log_ << "warning: cache entry " << path.string() << " " << why
                    << "; recomputing\n";
    return std::nullopt;
  };
  std::string magic, key_line, fps_line, sum_line;
  if (!std::getline(in, magic) || magic != kCacheMagic ||
      !std::getline(in, key_line) || !std::getline(in, fps_line) ||
      !std::getline(in, sum_line)) {
    return warn("is malformed");
  }
  if (key_line != "key " + key) return warn("belongs to another key");
  std::stringstream body;
  body << in.rdbuf();
  const std::string payload = body.str();
  if (sum_line != "checksum " + Sha256Hex(payload)) return warn("fails its checksum");
  CachedFeatures entry;
  try {
    if (fps_line.rfind("fps ", 0) != 0) return warn("is malformed");
    entry.frame_rate = text::ParseDouble(fps_line.substr(4), "fps");
    std::istringstream table_in(payload);
    entry.table = ReadFeatureCsv(table_in);
  } catch (const ConfigError&) {
    return warn("is malformed");
  }
  if (log_) *log_ << "cache hit: " << path.string() << "\n";
  return entry;
}

void FeatureCache::Store(const std::string& key, const CachedFeatures& entry) const {
  std::ostringstream body;
  WriteFeatureCsv(body, entry.table);
  const std::string payload = body.str();
  const auto path = EntryPath(key);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DecodeError("cannot write cache entry " + tmp.string());
    out << kCacheMagic << "\nkey " << key << "\nfps "
        << text::FormatDouble(entry.frame_rate) << "\nchecksum " << Sha256Hex(payload)
        << "\n"
        << payload;
    if (!out) throw DecodeError("write failed for cache entry " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw DecodeError("cannot move cache entry into " + path.string());
}

ExtractionResult ExtractPair(const VideoSource& ref, const VideoSource& dist,
                             const ExtractorConfig& config,
                             const FeatureCache* cache) {
  std::string key;
  if (cache) {
    key = FeatureCache::Key(ref, dist, config);
    if (auto hit = cache->Lookup(key)) return {std::move(*hit), true};
  }
  const FrameSequence r = ref.Load();
  const FrameSequence d = dist.Load();
  ExtractionResult result;
  result.features.table = ExtractFeatures(r, d, config);
  result.features.frame_rate = r.frame_rate;
  if (cache) cache->Store(key, result.features);
  return result;
}

}  // namespace vqf
