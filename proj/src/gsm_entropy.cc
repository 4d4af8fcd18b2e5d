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

#include "vqf/gsm_entropy.h"

#include <cmath>
#include <numbers>
#include <string>

#include "vqf/errors.h"
#include "vqf/kernels.h"
#include "vqf/video_io.h"

namespace vqf {
namespace {

constexpr double kPsdTolerance = 1e-9;

Eigen::VectorXd CheckedEigenvalues(const Eigen::MatrixXd& k) {
  if (k.rows() != k.cols() || k.rows() == 0) {
    throw ContractViolation("covariance must be a non-empty square matrix");
  }
  const double scale = std::max(1.0, k.cwiseAbs().maxCoeff());
  if ((k - k.transpose()).cwiseAbs().maxCoeff() > kPsdTolerance * scale) {
    throw ContractViolation("covariance is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      k, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigendecomposition of covariance failed");
  }
  Eigen::VectorXd lambda = solver.eigenvalues();
  if (lambda.minCoeff() < -kPsdTolerance * scale) {
    throw ContractViolation("covariance is not positive semi-definite (min "
                            "eigenvalue " +
                            std::to_string(lambda.minCoeff()) + ")");
  }
  return lambda.cwiseMax(0.0);
}

std::array<double, 3> SpeedAtScales(const Plane& ref, const Plane& dist,
                                    const GsmParams& params) {
  if (!ref.SameShape(dist)) {
    throw ContractViolation("SpEED inputs differ in size");
  }
  std::array<double, 3> out{};
  Plane r = DyadicDownsample(ref, kSpeedScales.front());
  Plane d = DyadicDownsample(dist, kSpeedScales.front());
  for (std::size_t i = 0; i < kSpeedScales.size(); ++i) {
    if (i > 0) {
      r = DyadicDownsample(r, kSpeedScales[i] - kSpeedScales[i - 1]);
      d = DyadicDownsample(d, kSpeedScales[i] - kSpeedScales[i - 1]);
    }
    if (r.width() < params.block_size || r.height() < params.block_size) {
      throw ScaleError("scale " + std::to_string(kSpeedScales[i]) +
                       " plane is " + std::to_string(r.width()) + "x" +
                       std::to_string(r.height()) + ", smaller than one " +
                       std::to_string(params.block_size) + "x" +
                       std::to_string(params.block_size) + " block");
    }
    out[i] = SpeedFeature(r, d, params);
  }
  return out;
}

}  // namespace

std::array<double, 7> SpeedGaussianTaps() {
  constexpr double sigma = 7.0 / 6.0;
  std::array<double, 7> taps{};
  double sum = 0.0;
  for (int i = 0; i < 7; ++i) {
    const double x = i - 3;
    taps[i] = std::exp(-x * x / (2.0 * sigma * sigma));
    sum += taps[i];
  }
  for (auto& t : taps) t /= sum;
  return taps;
}

Plane GaussianFilter(const Plane& plane) {
  static const auto taps = SpeedGaussianTaps();
  return kernels::parallel::ConvolveSeparable(plane, taps);
}

MsMap ComputeMsMap(const Plane& plane) {
  const Plane mu = GaussianFilter(plane);
  Plane out(plane.width(), plane.height());
  const auto src = plane.samples();
  const auto m = mu.samples();
  auto dst = out.samples();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = src[i] - m[i];
  return MsMap{std::move(out)};
}

Plane BlockVariances(const MsMap& map, int block_size) {
  return kernels::parallel::BlockEnergy(map.values, block_size);
}

std::optional<Eigen::MatrixXd> EstimateCovariance(const MsMap& map,
                                                  int block_size) {
  const Plane variances = BlockVariances(map, block_size);
  double mean_s2 = 0.0;
  for (double v : variances.samples()) mean_s2 += v;
  mean_s2 /= static_cast<double>(variances.size());
  if (!(mean_s2 > 0.0)) return std::nullopt;

  long count = 0;
  const auto tri =
      kernels::parallel::PatchSecondMoment(map.values, block_size, &count);
  const int n = block_size * block_size;
  Eigen::MatrixXd k(n, n);
  const double norm = 1.0 / (static_cast<double>(count) * mean_s2);
  std::size_t idx = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      k(i, j) = tri[idx++] * norm;
      k(j, i) = k(i, j);
    }
  }
  return k;
}

BlockStats ComputeBlockStats(const MsMap& map, const GsmParams& params) {
  BlockStats stats;
  stats.block_size = params.block_size;
  stats.noise_variance = params.noise_variance;
  stats.block_variances = BlockVariances(map, params.block_size);
  auto k = EstimateCovariance(map, params.block_size);
  if (k) {
    stats.covariance = std::move(*k);
  } else {
    stats.degenerate = true;
  }
  return stats;
}

EntropyEvaluator::EntropyEvaluator(const Eigen::MatrixXd& covariance,
                                   double noise_variance)
    : eigenvalues_(CheckedEigenvalues(covariance)),
      noise_variance_(noise_variance),
      constant_(static_cast<double>(covariance.rows()) *
                std::log(2.0 * std::numbers::pi * std::numbers::e)) {
  if (!(noise_variance > 0.0)) {
    throw ContractViolation("noise variance must be positive");
  }
}

double EntropyEvaluator::operator()(double s2) const {
  if (s2 < 0.0) throw ContractViolation("negative block variance");
  double log_det = 0.0;
  for (Eigen::Index j = 0; j < eigenvalues_.size(); ++j) {
    log_det += std::log(s2 * eigenvalues_[j] + noise_variance_);
  }
  return 0.5 * (constant_ + log_det);
}

double ConditionedEntropy(double s2, const Eigen::MatrixXd& covariance,
                          double noise_variance) {
  return EntropyEvaluator(covariance, noise_variance)(s2);
}

Plane WeightedEntropyField(const MsMap& map, const BlockStats& stats) {
  const Plane& s2 = stats.block_variances;
  if (s2.width() != map.values.width() / stats.block_size ||
      s2.height() != map.values.height() / stats.block_size) {
    throw ContractViolation("block statistics do not belong to this map");
  }
  Plane field(s2.width(), s2.height());
  if (stats.degenerate) return field;  // every s^2 is 0, so every weight is 0
  const EntropyEvaluator entropy(stats.covariance, stats.noise_variance);
  const auto in = s2.samples();
  auto out = field.samples();
  for (std::size_t m = 0; m < out.size(); ++m) {
    out[m] = entropy(in[m]) * std::log1p(in[m]);
  }
  return field;
}

double SpeedFeature(const Plane& ref, const Plane& dist,
                    const GsmParams& params) {
  if (!ref.SameShape(dist)) {
    throw ContractViolation("SpEED inputs differ in size");
  }
  const MsMap ref_map = ComputeMsMap(ref);
  const MsMap dist_map = ComputeMsMap(dist);
  const Plane ref_field =
      WeightedEntropyField(ref_map, ComputeBlockStats(ref_map, params));
  const Plane dist_field =
      WeightedEntropyField(dist_map, ComputeBlockStats(dist_map, params));
  const auto a = ref_field.samples();
  const auto b = dist_field.samples();
  double sum = 0.0;
  for (std::size_t m = 0; m < a.size(); ++m) sum += std::abs(a[m] - b[m]);
  return sum / static_cast<double>(a.size());
}

std::array<double, 3> SpatialSpeed(const Plane& ref_frame,
                                   const Plane& dist_frame,
                                   const GsmParams& params) {
  return SpeedAtScales(ref_frame, dist_frame, params);
}

std::array<double, 3> TemporalSpeed(const Plane& ref_diff,
                                    const Plane& dist_diff,
                                    const GsmParams& params) {
  return SpeedAtScales(ref_diff, dist_diff, params);
}

}  // namespace vqf
