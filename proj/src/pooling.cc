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

#include "vqf/pooling.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "vqf/errors.h"

namespace vqf {
namespace {

void CheckScores(std::span<const double> scores) {
  if (scores.empty()) throw ContractViolation("cannot pool an empty series");
  for (double s : scores) {
    if (!std::isfinite(s)) throw ContractViolation("non-finite frame score");
  }
}

}  // namespace

PoolingMethod ParsePoolingMethod(std::string_view name) {
  if (name == "mean") return PoolingMethod::kMean;
  if (name == "hysteresis") return PoolingMethod::kHysteresis;
  throw ConfigError("unknown pooling method '" + std::string(name) + "'");
}

double MeanPool(std::span<const double> scores) {
  CheckScores(scores);
  const double base = scores.front();
  double sum = 0.0;
  for (double s : scores) sum += s - base;
  return base + sum / static_cast<double>(scores.size());
}

HysteresisResult HysteresisPoolWindow(std::span<const double> scores,
                                      int window, double alpha) {
  CheckScores(scores);
  if (window < 1) throw ContractViolation("hysteresis window must be >= 1 frame");
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ContractViolation("hysteresis alpha must lie in [0, 1]");
  }
  const int n = static_cast<int>(scores.size());
  const double sigma = window / 3.0;
  std::vector<double> weights(window);
  for (int j = 0; j < window; ++j) {
    weights[j] = std::exp(-(static_cast<double>(j) * j) / (2.0 * sigma * sigma));
  }

  HysteresisResult result;
  result.pooled.resize(n);
  std::vector<double> ahead;
  for (int t = 0; t < n; ++t) {
    double memory = scores[t];
    if (t > 0) {
      memory = scores[t - 1];
      for (int k = std::max(0, t - window); k < t; ++k) {
        memory = std::min(memory, scores[k]);
      }
    }
    const int end = std::min(n, t + window);
    ahead.assign(scores.begin() + t, scores.begin() + end);
    std::sort(ahead.begin(), ahead.end());
    // Written relative to the worst score so a flat window returns it exactly.
    double weighted = 0.0;
    double norm = 0.0;
    for (std::size_t j = 0; j < ahead.size(); ++j) {
      weighted += weights[j] * (ahead[j] - ahead.front());
      norm += weights[j];
    }
    const double current = ahead.front() + weighted / norm;
    result.pooled[t] = current + alpha * (memory - current);
  }
  result.score = MeanPool(result.pooled);
  return result;
}

HysteresisResult HysteresisPool(const ScoreSeries& series,
                                const HysteresisParams& params) {
  if (!(params.tau_mem > 0.0)) throw ContractViolation("tau_mem must be positive");
  if (!(series.frame_rate > 0.0)) {
    throw ContractViolation("frame rate must be positive");
  }
  const long window = std::lround(params.tau_mem * series.frame_rate);
  if (window < 1) {
    throw ContractViolation("tau_mem * fps rounds to a window of " +
                            std::to_string(window) + " frames");
  }
  return HysteresisPoolWindow(series.scores, static_cast<int>(window),
                              params.alpha);
}

double Pool(const ScoreSeries& series, PoolingMethod method,
            const HysteresisParams& params) {
  if (method == PoolingMethod::kMean) return MeanPool(series.scores);
  return HysteresisPool(series, params).score;
}

}  // namespace vqf
