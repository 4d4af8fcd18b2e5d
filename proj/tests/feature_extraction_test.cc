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

#include "vqf/feature_extraction.h"

#include <gtest/gtest.h>
#include <omp.h>

#include <sstream>

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

TEST(FeatureNames, CanonicalOrder) {
  const std::vector<std::string> want = {
      "vif0", "vif1", "vif2", "vif3", "dlm", "ti", "tvif0", "tvif1", "tvif2", "tvif3",
      "sspeed2", "sspeed3", "sspeed4", "tspeed2", "tspeed3", "tspeed4"};
  EXPECT_EQ(AllFeatureNames(), want);
  EXPECT_EQ(FeatureNamesFor(kGroupAll), want);
  EXPECT_EQ(FeatureNamesFor(kGroupDlm | kGroupTi), (std::vector<std::string>{"dlm", "ti"}));
}

TEST(ExtractFeatures, IdentityValuesAndPadding) {
  const auto clip = testing::MovingClip(80, 80, 4, 3);
  const auto t = ExtractFeatures(Seq(clip), Seq(clip));
  ASSERT_EQ(t.num_frames(), 4u);
  for (std::size_t f = 0; f < 4; ++f) {
    for (const char* n : {"vif0", "vif3", "dlm", "tvif0", "tvif2"}) {
      EXPECT_NEAR(t.column(n)[f], 1.0, 1e-6) << n;
    }
    for (const char* n : {"sspeed2", "sspeed4", "tspeed3"}) EXPECT_EQ(t.column(n)[f], 0.0);
  }
  // Temporal columns repeat frame 1 at frame 0; TI is reference motion.
  EXPECT_EQ(t.column("ti")[0], t.column("ti")[1]);
  EXPECT_GT(t.column("ti")[1], 0.0);
}

TEST(ExtractFeatures, TemporalPaddingOnDistortedPair) {
  const auto clip = testing::MovingClip(80, 80, 3, 3);
  std::vector<Plane> dist;
  for (const auto& f : clip) dist.push_back(testing::Quantize(f, 12));
  const auto t = ExtractFeatures(Seq(clip), Seq(dist));
  for (const char* n : {"tvif0", "tvif3", "tspeed2", "tspeed4", "ti"}) {
    EXPECT_EQ(t.column(n)[0], t.column(n)[1]) << n;
  }
  EXPECT_NE(t.column("vif0")[0], t.column("vif0")[1]);
}

TEST(ExtractFeatures, GroupsSelectColumns) {
  const auto clip = testing::MovingClip(80, 80, 2, 3);
  ExtractorConfig cfg;
  cfg.groups = kGroupVif | kGroupDlm | kGroupTSpeed | kGroupTVif;
  const auto t = ExtractFeatures(Seq(clip), Seq(clip), cfg);
  EXPECT_EQ(t.names().size(), 12u);
  EXPECT_FALSE(t.has("ti"));
  EXPECT_THROW(t.column("ti"), ConfigError);
}

class ExtractThreads : public ::testing::TestWithParam<int> {};

TEST_P(ExtractThreads, ParallelMatchesSerialBitwise) {
  const auto clip = testing::MovingClip(96, 80, 5, 21);
  std::vector<Plane> dist;
  for (std::size_t i = 0; i < clip.size(); ++i) {
    dist.push_back(testing::AddNoise(testing::GaussianBlur(clip[i], 0.8), 3.0, i));
  }
  const auto serial = ExtractFeaturesSerial(Seq(clip), Seq(dist));
  omp_set_num_threads(GetParam());
  const auto par = ExtractFeatures(Seq(clip), Seq(dist));
  omp_set_num_threads(1);
  EXPECT_TRUE(serial == par);
}

INSTANTIATE_TEST_SUITE_P(Threads, ExtractThreads, ::testing::Values(1, 2, 4));

TEST(ExtractFeatures, Preconditions) {
  const auto clip = testing::MovingClip(80, 80, 3, 3);
  EXPECT_THROW(ExtractFeatures(Seq(clip), Seq({clip[0], clip[1]})), ContractViolation);
  EXPECT_THROW(ExtractFeatures(Seq({clip[0]}), Seq({clip[0]})), ContractViolation);
  EXPECT_THROW(ExtractFeatures(Seq({clip[0], clip[1]}),
                               Seq({Plane(80, 96), Plane(80, 96)})),
               ContractViolation);
}

TEST(FeatureCsv, RoundTripIsExact) {
  const auto clip = testing::MovingClip(80, 80, 3, 5);
  std::vector<Plane> dist;
  for (const auto& f : clip) dist.push_back(testing::AddNoise(f, 5, 1));
  const auto t = ExtractFeatures(Seq(clip), Seq(dist));
  std::stringstream s;
  WriteFeatureCsv(s, t);
  EXPECT_EQ(s.str().substr(0, 11), "frame,vif0,");
  const auto back = ReadFeatureCsv(s);
  EXPECT_TRUE(back == t);
}

TEST(FeatureCsv, RejectsMalformed) {
  std::istringstream no_frame("vif0\n1\n");
  EXPECT_THROW(ReadFeatureCsv(no_frame), ConfigError);
  std::istringstream ragged("frame,vif0\n0,1,2\n");
  EXPECT_THROW(ReadFeatureCsv(ragged), ConfigError);
}

}  // namespace
}  // namespace vqf
