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

#ifndef VQF_ELEMENTARY_FEATURES_H_
#define VQF_ELEMENTARY_FEATURES_H_

#include <array>
#include <optional>
#include <vector>

#include "vqf/plane.h"

namespace vqf {

inline constexpr int kVifScales = 4;
inline constexpr int kDlmLevels = 4;

struct VifParams {
  double sigma0 = 2.0;        // window sigma at scale 0, halved per scale
  double min_sigma = 0.5;     // floor for the coarse scales
  double sensor_noise = 2.0;  // sigma_n^2
  double epsilon = 1e-10;
};

// Gaussian window used at `scale`: sigma_k = max(sigma0 / 2^k, min_sigma),
// 2 * ceil(3 sigma_k) + 1 normalized taps.
std::vector<double> VifWindow(int scale, const VifParams& params = {});

// Scale-k inputs for VIF: each step smooths with the current scale's window
// and keeps every other row and column.
std::vector<Plane> VifPyramid(const Plane& plane, const VifParams& params = {});

// Pixel-domain VIF of two same-scale planes. nullopt when the reference has
// no local variance anywhere (zero denominator).
std::optional<double> VifScale(const Plane& ref, const Plane& dist, int scale,
                               const VifParams& params = {});

// VIF at scales 0..3; degenerate scales read 1.0.
std::array<double, kVifScales> SpatialVif(const Plane& ref_frame,
                                          const Plane& dist_frame,
                                          const VifParams& params = {});

// The same computation on frame differences (T-VIF).
std::array<double, kVifScales> TemporalVif(const Plane& ref_diff,
                                           const Plane& dist_diff,
                                           const VifParams& params = {});

struct DlmParams {
  // Per-level contrast sensitivity weights, finest level first.
  std::array<double, kDlmLevels> level_weights = {1.0, 1.0, 1.0, 1.0};
};

// One level of the separable Daubechies-2 analysis with half-sample
// symmetric extension; each band is ceil(w/2) x ceil(h/2).
struct WaveletBands {
  Plane approx;
  Plane horizontal;
  Plane vertical;
  Plane diagonal;
};
WaveletBands Db2Decompose(const Plane& plane);

// Detail loss measure: restored detail energy over reference detail energy,
// accumulated over four wavelet levels. nullopt when the reference has no
// detail energy.
std::optional<double> DlmRatio(const Plane& ref, const Plane& dist,
                               const DlmParams& params = {});

// DlmRatio with the degenerate case read as 1.0.
double Dlm(const Plane& ref_frame, const Plane& dist_frame,
           const DlmParams& params = {});

// Mean absolute luminance change between two frames.
double TemporalInformation(const Plane& curr, const Plane& next);

}  // namespace vqf

#endif  // VQF_ELEMENTARY_FEATURES_H_
