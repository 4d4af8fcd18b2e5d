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

#include "vqf/fusion.h"

#include "vqf/errors.h"

namespace vqf {

Layout ParseLayout(std::string_view id) {
  if (id == "stvmaf") return Layout::kStVmaf;
  if (id == "m1") return Layout::kM1;
  if (id == "m2") return Layout::kM2;
  throw ConfigError("unknown layout '" + std::string(id) + "'");
}

std::string_view LayoutId(Layout layout) {
  switch (layout) {
    case Layout::kStVmaf:
      return "stvmaf";
    case Layout::kM1:
      return "m1";
    case Layout::kM2:
      return "m2";
  }
  return "?";
}

const std::vector<std::string>& LayoutFeatures(Layout layout) {
  static const std::vector<std::string> st = {
      "vif0",    "vif1",    "vif2",  "vif3",  "dlm",   "tspeed2",
      "tspeed3", "tspeed4", "tvif0", "tvif1", "tvif2", "tvif3"};
  static const std::vector<std::string> m1 = {"vif0", "vif1", "vif2",
                                              "vif3", "dlm",  "ti"};
  static const std::vector<std::string> m2 = {"sspeed2", "sspeed3", "sspeed4",
                                              "tspeed2", "tspeed3", "tspeed4"};
  switch (layout) {
    case Layout::kStVmaf:
      return st;
    case Layout::kM1:
      return m1;
    case Layout::kM2:
      return m2;
  }
  return st;
}

std::uint32_t LayoutGroups(Layout layout) {
  switch (layout) {
    case Layout::kStVmaf:
      return kGroupVif | kGroupDlm | kGroupTSpeed | kGroupTVif;
    case Layout::kM1:
      return kGroupVif | kGroupDlm | kGroupTi;
    case Layout::kM2:
      return kGroupSSpeed | kGroupTSpeed;
  }
  return kGroupAll;
}

SvrParams DefaultSvrParams(Layout layout) {
  SvrParams p;
  p.cost = layout == Layout::kStVmaf ? 0.5 : 4.0;
  p.gamma = 0.04;
  p.epsilon = 1.0;
  return p;
}

double FeatureVector::operator[](std::string_view name) const {
  const auto& names = LayoutFeatures(layout);
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (names[k] == name) return values[k];
  }
  throw ConfigError("layout " + std::string(LayoutId(layout)) +
                    " has no feature '" + std::string(name) + "'");
}

std::vector<FeatureVector> AssembleFeatures(Layout layout,
                                            const FeatureTable& table) {
  const auto& names = LayoutFeatures(layout);
  std::vector<std::span<const double>> cols;
  cols.reserve(names.size());
  for (const auto& n : names) cols.push_back(table.column(n));
  std::vector<FeatureVector> out(table.num_frames(),
                                 FeatureVector{layout, std::vector<double>(names.size())});
  for (std::size_t f = 0; f < table.num_frames(); ++f) {
    for (std::size_t k = 0; k < names.size(); ++k) out[f].values[k] = cols[k][f];
  }
  return out;
}

FeatureVector AggregateForTraining(std::span<const FeatureVector> series) {
  if (series.empty()) {
    throw ContractViolation("cannot aggregate an empty feature series");
  }
  FeatureVector mean{series.front().layout,
                     std::vector<double>(series.front().values.size(), 0.0)};
  for (const auto& v : series) {
    if (v.layout != mean.layout || v.values.size() != mean.values.size()) {
      throw ContractViolation("feature series mixes layouts");
    }
    for (std::size_t k = 0; k < v.values.size(); ++k) mean.values[k] += v.values[k];
  }
  for (auto& m : mean.values) m /= static_cast<double>(series.size());
  return mean;
}

RegressionModel TrainModel(Layout layout, std::span<const FeatureVector> videos,
                           std::span<const double> mos,
                           const SvrParams& params) {
  std::vector<std::vector<double>> x;
  x.reserve(videos.size());
  for (const auto& v : videos) {
    if (v.layout != layout) {
      throw ContractViolation("training vector layout differs from model layout");
    }
    x.push_back(v.values);
  }
  return TrainSvr(x, mos, params, std::string(LayoutId(layout)),
                  LayoutFeatures(layout));
}

double PredictFrame(const RegressionModel& model, const FeatureVector& v,
                    bool clip_output) {
  if (model.layout != LayoutId(v.layout) ||
      model.feature_names != LayoutFeatures(v.layout)) {
    throw ContractViolation("model layout '" + model.layout +
                            "' does not match feature layout '" +
                            std::string(LayoutId(v.layout)) + "'");
  }
  return model.Predict(v.values, clip_output);
}

double EnsemblePredict(const RegressionModel& m1, const RegressionModel& m2,
                       const FeatureVector& v1, const FeatureVector& v2,
                       bool clip_output) {
  return 0.5 * (PredictFrame(m1, v1, clip_output) +
                PredictFrame(m2, v2, clip_output));
}

}  // namespace vqf
