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

#ifndef VQF_POOLING_H_
#define VQF_POOLING_H_

#include <span>
#include <string_view>
#include <vector>

namespace vqf {

struct ScoreSeries {
  std::vector<double> scores;
  double frame_rate = 0.0;
};

enum class PoolingMethod { kMean, kHysteresis };

// "mean" or "hysteresis".
PoolingMethod ParsePoolingMethod(std::string_view name);

struct HysteresisParams {
  double tau_mem = 2.0;  // seconds
  double alpha = 0.8;    // weight of the memory term
};

struct HysteresisResult {
  double score = 0.0;
  std::vector<double> pooled;  // per-frame alpha * memory + (1 - alpha) * current
};

// Arithmetic mean, evaluated as s_0 + mean(s - s_0) so that a constant series
// pools to exactly that constant.
double MeanPool(std::span<const double> scores);

// Hysteresis pooling with window w = round(tau_mem * fps):
//   memory  m_t = min(s[t-w .. t-1]), m_0 = s_0
//   current q_t = scores in s[t .. t+w-1] sorted worst-first, combined with
//                 normalized half-Gaussian weights (sigma = w / 3) that put
//                 the most weight on the worst score
//   pooled_t = alpha m_t + (1 - alpha) q_t
// Windows are truncated at the series ends.
HysteresisResult HysteresisPool(const ScoreSeries& series,
                                const HysteresisParams& params = {});

// Same, with the window length given in frames.
HysteresisResult HysteresisPoolWindow(std::span<const double> scores,
                                      int window, double alpha);

double Pool(const ScoreSeries& series, PoolingMethod method,
            const HysteresisParams& params = {});

}  // namespace vqf

#endif  // VQF_POOLING_H_
