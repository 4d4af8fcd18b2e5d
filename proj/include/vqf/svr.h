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

#ifndef VQF_SVR_H_
#define VQF_SVR_H_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace vqf {

struct SvrParams {
  double cost = 4.0;     // C
  double gamma = 0.04;   // RBF width: k(a, b) = exp(-gamma |a - b|^2)
  double epsilon = 1.0;  // tube half-width on the target scale
  double tolerance = 1e-6;
  long max_iterations = 10'000'000;

  friend bool operator==(const SvrParams&, const SvrParams&) = default;
};

// A trained epsilon-SVR with an RBF kernel over min-max normalized inputs.
// Immutable after training; safe to share across threads.
struct RegressionModel {
  static constexpr int kFormatVersion = 1;

  std::string layout;  // "stvmaf", "m1", "m2", or a free-form id
  std::vector<std::string> feature_names;
  SvrParams params;
  std::vector<double> feature_min;
  std::vector<double> feature_max;
  std::vector<std::vector<double>> support_vectors;  // normalized inputs
  std::vector<double> coefficients;                  // alpha - alpha*
  double rho = 0.0;
  double score_min = 0.0;
  double score_max = 0.0;
  long iterations = 0;
  std::vector<std::string> warnings;

  std::size_t num_features() const { return feature_names.size(); }

  // Maps raw features into [0, 1]; constant training columns map to 0.
  std::vector<double> Normalize(std::span<const double> raw) const;

  // Kernel expansion on raw features. With `clip_output` the result is
  // clamped to the training score range.
  double Predict(std::span<const double> raw, bool clip_output = true) const;

  friend bool operator==(const RegressionModel&, const RegressionModel&) = default;
};

// Solves the epsilon-SVR dual with SMO (second-order working-set selection)
// until the maximal KKT violation drops below params.tolerance. Throws
// NumericalError when fewer than two distinct samples are given or the
// iteration cap is hit.
RegressionModel TrainSvr(const std::vector<std::vector<double>>& features,
                         std::span<const double> targets,
                         const SvrParams& params, std::string layout,
                         std::vector<std::string> feature_names);

// Text serialization: a key-value header followed by the support-vector
// table. Doubles are written in shortest round-trip form so a reloaded model
// predicts bit-identically. LoadModel rejects unknown format versions.
void SaveModel(std::ostream& out, const RegressionModel& model);
RegressionModel LoadModel(std::istream& in);
void SaveModelFile(const std::string& path, const RegressionModel& model);
RegressionModel LoadModelFile(const std::string& path);

}  // namespace vqf

#endif  // VQF_SVR_H_
