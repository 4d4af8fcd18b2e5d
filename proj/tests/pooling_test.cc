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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "vqf/errors.h"

namespace vqf {
namespace {

std::vector<double> RandomSeries(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(20.0, 95.0);
  std::vector<double> s(n);
  for (double& v : s) v = u(rng);
  return s;
}

TEST(MeanPool, Examples) {
  EXPECT_EQ(MeanPool(std::vector<double>(17, 70.0)), 70.0);
  EXPECT_EQ(MeanPool(std::vector<double>{60, 80}), 70.0);
  const auto s = RandomSeries(101, 1);
  long double sum = 0.0L;
  for (double v : s) sum += v;
  EXPECT_NEAR(MeanPool(s), static_cast<double>(sum / s.size()), 1e-12);
  EXPECT_THROW(MeanPool(std::vector<double>{}), ContractViolation);
  EXPECT_THROW(MeanPool(std::vector<double>{1.0, NAN}), ContractViolation);
}

TEST(HysteresisPool, ConstantFixedPoint) {
  for (double c : {0.1, 70.0, 93.37}) {
    const auto r = HysteresisPool({std::vector<double>(90, c), 30.0});
    EXPECT_EQ(r.score, c);
    for (double p : r.pooled) EXPECT_EQ(p, c);
  }
}

TEST(HysteresisPool, WithinRange) {
  for (int seed = 0; seed < 20; ++seed) {
    const auto s = RandomSeries(75, seed);
    const double v = HysteresisPool({s, 24.0}).score;
    EXPECT_GE(v, *std::min_element(s.begin(), s.end()));
    EXPECT_LE(v, *std::max_element(s.begin(), s.end()));
  }
}

TEST(HysteresisPool, ShiftAndScaleEquivariance) {
  for (int seed = 0; seed < 10; ++seed) {
    const auto s = RandomSeries(64, seed + 100);
    const double base = HysteresisPool({s, 25.0}).score;
    auto shifted = s;
    for (double& v : shifted) v += 13.5;
    EXPECT_NEAR(HysteresisPool({shifted, 25.0}).score, base + 13.5, 1e-9);
    auto scaled = s;
    for (double& v : scaled) v *= 2.75;
    EXPECT_NEAR(HysteresisPool({scaled, 25.0}).score, 2.75 * base, 1e-9);
  }
}

TEST(HysteresisPool, DipBelowMean) {
  std::vector<double> s(120, 85.0);
  for (int t = 58; t < 63; ++t) s[t] = 30.0;
  const double mean = MeanPool(s);
  const double hyst = HysteresisPool({s, 30.0}).score;
  EXPECT_LT(hyst, mean);
}

TEST(HysteresisPool, DipDominance) {
  for (int seed = 0; seed < 10; ++seed) {
    const auto s = RandomSeries(50, seed + 7);
    for (int t : {1, 17, 48}) {
      auto lowered = s;
      lowered[t] -= 10.0;
      EXPECT_LE(HysteresisPool({lowered, 10.0}).score, HysteresisPool({s, 10.0}).score);
      EXPECT_LE(MeanPool(lowered), MeanPool(s));
    }
  }
}

TEST(HysteresisPool, AlphaZeroUnitWindowIsMean) {
  const auto s = RandomSeries(33, 5);
  EXPECT_EQ(HysteresisPoolWindow(s, 1, 0.0).score, MeanPool(s));
  // Same through the time-based entry point: tau * fps = 1 frame.
  EXPECT_EQ(HysteresisPool({s, 2.0}, {0.5, 0.0}).score, MeanPool(s));
}

TEST(HysteresisPool, HandComputedWindow) {
  // w = 2, alpha = 0.5. Half-Gaussian weights over the sorted window:
  // 1 and exp(-1/(2 (2/3)^2)) = exp(-9/8).
  const std::vector<double> s = {10, 4, 8};
  const double w1 = std::exp(-9.0 / 8.0);
  const auto r = HysteresisPoolWindow(s, 2, 0.5);
  const double q0 = (4 * 1 + 10 * w1) / (1 + w1);
  const double q1 = (4 * 1 + 8 * w1) / (1 + w1);
  const double q2 = 8;
  EXPECT_NEAR(r.pooled[0], 0.5 * 10 + 0.5 * q0, 1e-12);
  EXPECT_NEAR(r.pooled[1], 0.5 * 10 + 0.5 * q1, 1e-12);
  EXPECT_NEAR(r.pooled[2], 0.5 * 4 + 0.5 * q2, 1e-12);
  EXPECT_NEAR(r.score, (r.pooled[0] + r.pooled[1] + r.pooled[2]) / 3, 1e-12);
}

TEST(HysteresisPool, Errors) {
  EXPECT_THROW(HysteresisPool({{}, 30.0}), ContractViolation);
  EXPECT_THROW(HysteresisPool({{1, 2}, 30.0}, {0.01, 0.8}), ContractViolation);
  EXPECT_THROW(HysteresisPool({{1, 2}, 30.0}, {-1.0, 0.8}), ContractViolation);
  EXPECT_THROW(HysteresisPool({{1, 2}, 30.0}, {2.0, 1.5}), ContractViolation);
  EXPECT_THROW(HysteresisPool({{1, 2}, 0.0}), ContractViolation);
}

TEST(Pooling, ParseAndDispatch) {
  EXPECT_EQ(ParsePoolingMethod("mean"), PoolingMethod::kMean);
  EXPECT_EQ(ParsePoolingMethod("hysteresis"), PoolingMethod::kHysteresis);
  EXPECT_THROW(ParsePoolingMethod("median"), ConfigError);
  const auto s = RandomSeries(40, 3);
  EXPECT_EQ(Pool({s, 20.0}, PoolingMethod::kMean), MeanPool(s));
  EXPECT_EQ(Pool({s, 20.0}, PoolingMethod::kHysteresis), HysteresisPool({s, 20.0}).score);
}

}  // namespace
}  // namespace vqf
