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

#ifndef VQF_GSM_ENTROPY_H_
#define VQF_GSM_ENTROPY_H_

#include <array>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "vqf/plane.h"

// Spatial and temporal entropic differencing (S-SpEED / T-SpEED).
//
// A frame (or frame difference) is band-passed by subtracting its local
// Gaussian mean. The resulting MS map is cut into b x b blocks, each modelled
// as a Gaussian scale mixture C = S U with U ~ N(0, K) observed through
// additive N(0, sigma_w^2 I) neural noise. Each block's conditional entropy
//
//   h(C' | S = s) = 1/2 [ N ln(2 pi e) + ln det(s^2 K + sigma_w^2 I) ]
//
// is weighted by ln(1 + s^2), and the feature is the mean absolute
// difference between the reference and distorted weighted-entropy fields.

namespace vqf {

// Locally mean-subtracted response map.
struct MsMap {
  Plane values;
};

struct GsmParams {
  int block_size = 5;
  double noise_variance = 0.1;  // sigma_w^2
};

struct BlockStats {
  Plane block_variances;       // s^2 per non-overlapping block
  Eigen::MatrixXd covariance;  // K_U, (b^2 x b^2); empty when degenerate
  int block_size = 5;
  double noise_variance = 0.1;
  bool degenerate = false;     // identically zero map; no K
};

// Scales at which S-SpEED and T-SpEED are evaluated.
inline constexpr std::array<int, 3> kSpeedScales = {2, 3, 4};

// Normalized 7-tap 1-D Gaussian (sigma = 7/6); the 2-D kernel is its outer
// product.
std::array<double, 7> SpeedGaussianTaps();

// 7x7 Gaussian blur with symmetric borders.
Plane GaussianFilter(const Plane& plane);

// plane - GaussianFilter(plane).
MsMap ComputeMsMap(const Plane& plane);

// s^2 = c^T c / N per non-overlapping block; remainder rows/columns dropped.
Plane BlockVariances(const MsMap& map, int block_size);

// Second moment of every stride-1 b x b patch, divided by the mean block
// variance so that the scale field and K are separated. Returns nullopt for
// an identically zero map.
std::optional<Eigen::MatrixXd> EstimateCovariance(const MsMap& map,
                                                  int block_size);

BlockStats ComputeBlockStats(const MsMap& map, const GsmParams& params = {});

// Conditional entropy of one block in nats. Throws ContractViolation when K
// is not symmetric PSD (tolerance 1e-9).
double ConditionedEntropy(double s2, const Eigen::MatrixXd& covariance,
                          double noise_variance);

// Evaluates ConditionedEntropy for many s^2 against one K by diagonalizing K
// once: ln det(s^2 K + sigma^2 I) = sum_j ln(s^2 lambda_j + sigma^2).
class EntropyEvaluator {
 public:
  EntropyEvaluator(const Eigen::MatrixXd& covariance, double noise_variance);

  double operator()(double s2) const;
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

 private:
  Eigen::VectorXd eigenvalues_;
  double noise_variance_;
  double constant_;  // N ln(2 pi e)
};

// Per-block h(s^2) * ln(1 + s^2). A degenerate map yields an all-zero field.
Plane WeightedEntropyField(const MsMap& map, const BlockStats& stats);

// Mean over blocks of |ref - dist| weighted entropy. Both planes must already
// be at the target scale.
double SpeedFeature(const Plane& ref, const Plane& dist,
                    const GsmParams& params = {});

// S-SpEED at scales 2, 3, 4 from full-resolution frames.
std::array<double, 3> SpatialSpeed(const Plane& ref_frame,
                                   const Plane& dist_frame,
                                   const GsmParams& params = {});

// T-SpEED at scales 2, 3, 4 from full-resolution frame differences.
std::array<double, 3> TemporalSpeed(const Plane& ref_diff,
                                    const Plane& dist_diff,
                                    const GsmParams& params = {});

}  // namespace vqf

#endif  // VQF_GSM_ENTROPY_H_
