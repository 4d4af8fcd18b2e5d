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

#include <gtest/gtest.h>

#include <random>

#include "synthetic.h"
#include "vqf/errors.h"

namespace vqf {
namespace {

FrameSequence Seq(std::vector<Plane> frames) {
  FrameSequence s;
  s.frames = std::move(frames);
  s.frame_rate = 30.0;
  return s;
}

TEST(Layout, FeatureCounts) {
  EXPECT_EQ(LayoutFeatures(Layout::kStVmaf).size(), 12u);
  EXPECT_EQ(LayoutFeatures(Layout::kM1).size(), 6u);
  EXPECT_EQ(LayoutFeatures(Layout::kM2).size(), 6u);
  for (Layout l : {Layout::kStVmaf, Layout::kM1, Layout::kM2}) {
    EXPECT_EQ(ParseLayout(LayoutId(l)), l);
    EXPECT_EQ(FeatureNamesFor(LayoutGroups(l)).size(), LayoutFeatures(l).size());
  }
  EXPECT_THROW(ParseLayout("vmaf9"), ConfigError);
}

TEST(Layout, DefaultRegressionParams) {
  EXPECT_EQ(DefaultSvrParams(Layout::kStVmaf).cost, 0.5);
  EXPECT_EQ(DefaultSvrParams(Layout::kM1).cost, 4.0);
  EXPECT_EQ(DefaultSvrParams(Layout::kM2).cost, 4.0);
  for (Layout l : {Layout::kStVmaf, Layout::kM1, Layout::kM2}) {
    EXPECT_EQ(DefaultSvrParams(l).gamma, 0.04);
  }
}

TEST(AssembleFeatures, ShapeAndIdentities) {
  const auto clip = testing::MovingClip(80, 80, 10, 4);
  const auto table = ExtractFeatures(Seq(clip), Seq(clip));
  const auto st = AssembleFeatures(Layout::kStVmaf, table);
  ASSERT_EQ(st.size(), 10u);
  for (const auto& v : st) EXPECT_EQ(v.values.size(), 12u);
  EXPECT_NEAR(st[3]["vif2"], 1.0, 1e-6);
  EXPECT_THROW(st[3]["ti"], ConfigError);
  for (const auto& v : AssembleFeatures(Layout::kM2, table)) {
    for (double x : v.values) EXPECT_EQ(x, 0.0);
  }
}

TEST(AssembleFeatures, MissingColumnIsConfigError) {
  FeatureTable t({"vif0"}, 2);
  EXPECT_THROW(AssembleFeatures(Layout::kM1, t), ConfigError);
}

TEST(AggregateForTraining, MeanPerFeature) {
  const std::vector<FeatureVector> constant(5, FeatureVector{Layout::kM1, {1, 2, 3, 4, 5, 6}});
  EXPECT_EQ(AggregateForTraining(constant).values, constant[0].values);

  const std::vector<FeatureVector> two = {FeatureVector{Layout::kM1, std::vector<double>(6, 0.0)},
                                          FeatureVector{Layout::kM1, std::vector<double>(6, 2.0)}};
  EXPECT_EQ(AggregateForTraining(two).values, std::vector<double>(6, 1.0));

  EXPECT_THROW(AggregateForTraining(std::vector<FeatureVector>{}), ContractViolation);
  const std::vector<FeatureVector> mixed = {FeatureVector{Layout::kM1, std::vector<double>(6)},
                                            FeatureVector{Layout::kM2, std::vector<double>(6)}};
  EXPECT_THROW(AggregateForTraining(mixed), ContractViolation);
}

TEST(AggregateForTraining, MatchesSummationOverClip) {
  const auto clip = testing::MovingClip(80, 80, 6, 4);
  std::vector<Plane> dist;
  for (const auto& f : clip) dist.push_back(testing::GaussianBlur(f, 1.2));
  const auto table = ExtractFeatures(Seq(clip), Seq(dist));
  const auto agg = AggregateForTraining(AssembleFeatures(Layout::kM1, table));
  long double sum = 0.0L;
  for (double v : table.column("vif0")) sum += v;
  EXPECT_NEAR(agg["vif0"], static_cast<double>(sum / 6.0L), 1e-14);
}

struct TrainedPair {
  RegressionModel m1, m2;
  FeatureVector v1, v2;
};

TrainedPair TrainTwo() {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<FeatureVector> a, b;
  std::vector<double> mos;
  for (int i = 0; i < 20; ++i) {
    FeatureVector va{Layout::kM1, std::vector<double>(6)};
    FeatureVector vb{Layout::kM2, std::vector<double>(6)};
    for (double& x : va.values) x = u(rng);
    for (double& x : vb.values) x = u(rng);
    mos.push_back(20.0 + 60.0 * va.values[0] + 10.0 * vb.values[1]);
    a.push_back(va);
    b.push_back(vb);
  }
  TrainedPair p{TrainModel(Layout::kM1, a, mos, DefaultSvrParams(Layout::kM1)),
                TrainModel(Layout::kM2, b, mos, DefaultSvrParams(Layout::kM2)), a[4], b[9]};
  return p;
}

TEST(Predict, LayoutMismatchIsContractViolation) {
  const auto p = TrainTwo();
  EXPECT_THROW(PredictFrame(p.m1, p.v2), ContractViolation);
  std::vector<FeatureVector> wrong = {p.v2, p.v2};
  EXPECT_THROW(TrainModel(Layout::kM1, wrong, std::vector<double>{1, 2},
                          DefaultSvrParams(Layout::kM1)),
               ContractViolation);
}

TEST(Predict, EnsembleIsMeanOfMembers) {
  const auto p = TrainTwo();
  const double a = PredictFrame(p.m1, p.v1);
  const double b = PredictFrame(p.m2, p.v2);
  const double e = EnsemblePredict(p.m1, p.m2, p.v1, p.v2);
  EXPECT_EQ(e, 0.5 * (a + b));
  EXPECT_GE(e, std::min(a, b));
  EXPECT_LE(e, std::max(a, b));
}

}  // namespace
}  // namespace vqf
