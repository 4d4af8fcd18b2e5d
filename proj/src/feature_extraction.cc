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

#include "vqf/feature_extraction.h"

#include <exception>
#include <istream>
#include <ostream>

#include "text_util.h"
#include "vqf/errors.h"

namespace vqf {
namespace {

struct GroupColumns {
  FeatureGroup group;
  std::vector<std::string> names;
};

const std::vector<GroupColumns>& Groups() {
  static const std::vector<GroupColumns> groups = {
      {kGroupVif, {"vif0", "vif1", "vif2", "vif3"}},
      {kGroupDlm, {"dlm"}},
      {kGroupTi, {"ti"}},
      {kGroupTVif, {"tvif0", "tvif1", "tvif2", "tvif3"}},
      {kGroupSSpeed, {"sspeed2", "sspeed3", "sspeed4"}},
      {kGroupTSpeed, {"tspeed2", "tspeed3", "tspeed4"}},
  };
  return groups;
}

constexpr std::uint32_t kTemporalGroups = kGroupTi | kGroupTVif | kGroupTSpeed;

void CheckInputs(const FrameSequence& ref, const FrameSequence& dist) {
  if (ref.size() != dist.size()) {
    throw ContractViolation("reference has " + std::to_string(ref.size()) +
                            " frames, distorted has " +
                            std::to_string(dist.size()));
  }
  if (ref.size() < 2) {
    throw ContractViolation("feature extraction needs at least 2 frames");
  }
  for (std::size_t i = 0; i < ref.size(); ++i) {
    if (!ref.frames[i].SameShape(ref.frames[0]) ||
        !dist.frames[i].SameShape(ref.frames[0])) {
      throw ContractViolation("frame " + std::to_string(i) +
                              " differs in size from frame 0");
    }
  }
}

// Fills row `i` of `table`. Column order follows FeatureNamesFor.
void ExtractFrame(const FrameSequence& ref, const FrameSequence& dist,
                  const ExtractorConfig& config, std::size_t i,
                  FeatureTable& table) {
  const std::uint32_t g = config.groups;
  std::size_t col = 0;
  auto put = [&](double v) { table.at(i, col++) = v; };
  const Plane& r = ref.frames[i];
  const Plane& d = dist.frames[i];
  const bool temporal = i > 0;
  DiffPlane r_diff;
  DiffPlane d_diff;
  if (temporal && (g & (kGroupTVif | kGroupTSpeed))) {
    r_diff = FrameDifference(r, ref.frames[i - 1]);
    d_diff = FrameDifference(d, dist.frames[i - 1]);
  }

  if (g & kGroupVif) {
    for (double v : SpatialVif(r, d, config.vif)) put(v);
  }
  if (g & kGroupDlm) put(Dlm(r, d, config.dlm));
  if (g & kGroupTi) {
    put(temporal ? TemporalInformation(ref.frames[i - 1], r) : 0.0);
  }
  if (g & kGroupTVif) {
    if (temporal) {
      for (double v : TemporalVif(r_diff, d_diff, config.vif)) put(v);
    } else {
      col += kVifScales;
    }
  }
  if (g & kGroupSSpeed) {
    for (double v : SpatialSpeed(r, d, config.gsm)) put(v);
  }
  if (g & kGroupTSpeed) {
    if (temporal) {
      for (double v : TemporalSpeed(r_diff, d_diff, config.gsm)) put(v);
    } else {
      col += kSpeedScales.size();
    }
  }
}

void PadFirstFrame(FeatureTable& table, std::uint32_t groups) {
  for (const auto& gc : Groups()) {
    if (!(gc.group & groups & kTemporalGroups)) continue;
    for (const auto& name : gc.names) {
      auto col = table.column(name);
      col[0] = col[1];
    }
  }
}

FeatureTable EmptyTable(const FrameSequence& ref, const ExtractorConfig& config) {
  if ((config.groups & ~static_cast<std::uint32_t>(kGroupAll)) != 0 ||
      config.groups == 0) {
    throw ConfigError("invalid feature group mask");
  }
  return FeatureTable(FeatureNamesFor(config.groups), ref.size());
}

}  // namespace

const std::vector<std::string>& AllFeatureNames() {
  static const std::vector<std::string> names = FeatureNamesFor(kGroupAll);
  return names;
}

std::vector<std::string> FeatureNamesFor(std::uint32_t groups) {
  std::vector<std::string> names;
  for (const auto& gc : Groups()) {
    if (gc.group & groups) names.insert(names.end(), gc.names.begin(), gc.names.end());
  }
  return names;
}

FeatureTable::FeatureTable(std::vector<std::string> names, std::size_t frames)
    : names_(std::move(names)),
      frames_(frames),
      columns_(names_.size(), std::vector<double>(frames, 0.0)) {}

std::size_t FeatureTable::IndexOf(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  throw ConfigError("missing feature column '" + std::string(name) + "'");
}

bool FeatureTable::has(std::string_view name) const {
  for (const auto& n : names_) {
    if (n == name) return true;
  }
  return false;
}

std::span<const double> FeatureTable::column(std::string_view name) const {
  return columns_[IndexOf(name)];
}

std::span<double> FeatureTable::column(std::string_view name) {
  return columns_[IndexOf(name)];
}

FeatureTable ExtractFeatures(const FrameSequence& ref,
                             const FrameSequence& dist,
                             const ExtractorConfig& config) {
  CheckInputs(ref, dist);
  FeatureTable table = EmptyTable(ref, config);
  const long frames = static_cast<long>(ref.size());
  std::vector<std::exception_ptr> errors(ref.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < frames; ++i) {
    try {
      ExtractFrame(ref, dist, config, static_cast<std::size_t>(i), table);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  PadFirstFrame(table, config.groups);
  return table;
}

FeatureTable ExtractFeaturesSerial(const FrameSequence& ref,
                                   const FrameSequence& dist,
                                   const ExtractorConfig& config) {
  CheckInputs(ref, dist);
  FeatureTable table = EmptyTable(ref, config);
  for (std::size_t i = 0; i < ref.size(); ++i) {
    ExtractFrame(ref, dist, config, i, table);
  }
  PadFirstFrame(table, config.groups);
  return table;
}

void WriteFeatureCsv(std::ostream& out, const FeatureTable& table) {
  out << "frame";
  for (const auto& n : table.names()) out << ',' << n;
  out << '\n';
  for (std::size_t f = 0; f < table.num_frames(); ++f) {
    out << f;
    for (std::size_t c = 0; c < table.names().size(); ++c) {
      out << ',' << text::FormatDouble(table.at(f, c));
    }
    out << '\n';
  }
}

FeatureTable ReadFeatureCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("empty feature CSV");
  auto header = text::SplitCsvLine(line);
  if (header.empty() || header.front() != "frame") {
    throw ConfigError("feature CSV must start with a 'frame' column");
  }
  header.erase(header.begin());
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (text::Trim(line).empty()) continue;
    const auto fields = text::SplitCsvLine(line);
    if (fields.size() != header.size() + 1) {
      throw ConfigError("feature CSV row " + std::to_string(rows.size() + 1) +
                        " has " + std::to_string(fields.size()) +
                        " fields, expected " + std::to_string(header.size() + 1));
    }
    std::vector<double> row;
    for (std::size_t c = 1; c < fields.size(); ++c) {
      row.push_back(text::ParseDouble(fields[c], header[c - 1]));
    }
    rows.push_back(std::move(row));
  }
  FeatureTable table(header, rows.size());
  for (std::size_t f = 0; f < rows.size(); ++f) {
    for (std::size_t c = 0; c < header.size(); ++c) table.at(f, c) = rows[f][c];
  }
  return table;
}

}  // namespace vqf
