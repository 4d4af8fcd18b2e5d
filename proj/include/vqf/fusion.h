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

#ifndef VQF_FUSION_H_
#define VQF_FUSION_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vqf/feature_extraction.h"
#include "vqf/svr.h"

namespace vqf {

// Feature layouts of the individual regressors. E-VMAF is not a layout of
// its own: it pairs an M1 model with an M2 model.
enum class Layout {
  kStVmaf,  // vif0..3, dlm, tspeed2..4, tvif0..3
  kM1,      // vif0..3, dlm, ti
  kM2,      // sspeed2..4, tspeed2..4
};

// "stvmaf", "m1", "m2"; throws ConfigError otherwise.
Layout ParseLayout(std::string_view id);
std::string_view LayoutId(Layout layout);
const std::vector<std::string>& LayoutFeatures(Layout layout);
std::uint32_t LayoutGroups(Layout layout);

// Regression defaults: C = 0.5 for ST-VMAF, C = 4 for M1/M2; gamma = 0.04
// and epsilon = 1.0 throughout.
SvrParams DefaultSvrParams(Layout layout);

struct FeatureVector {
  Layout layout;
  std::vector<double> values;  // ordered as LayoutFeatures(layout)

  double operator[](std::string_view name) const;
};

// One vector per frame. Throws ConfigError if the table lacks a column.
std::vector<FeatureVector> AssembleFeatures(Layout layout,
                                            const FeatureTable& table);

// Per-feature arithmetic mean over frames. Throws ContractViolation on an
// empty series or mixed layouts.
FeatureVector AggregateForTraining(std::span<const FeatureVector> series);

RegressionModel TrainModel(Layout layout, std::span<const FeatureVector> videos,
                           std::span<const double> mos,
                           const SvrParams& params);

// Throws ContractViolation if the model was trained on another layout.
double PredictFrame(const RegressionModel& model, const FeatureVector& v,
                    bool clip_output = true);

// Unweighted mean of the M1 and M2 predictions.
double EnsemblePredict(const RegressionModel& m1, const RegressionModel& m2,
                       const FeatureVector& v1, const FeatureVector& v2,
                       bool clip_output = true);

}  // namespace vqf

#endif  // VQF_FUSION_H_
