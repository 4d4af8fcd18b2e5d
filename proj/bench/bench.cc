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

// Reference (serial) kernels against their OpenMP counterparts, and the
// serial extractor against the parallel one. Thread count follows
// OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "synthetic.h"
#include "vqf/feature_extraction.h"
#include "vqf/gsm_entropy.h"
#include "vqf/kernels.h"

namespace vqf {
namespace {

const Plane& Frame1080() {
  static const Plane p = testing::TexturedFrame(1920, 1080, 3);
  return p;
}

template <Plane (*Fn)(const Plane&, std::span<const double>)>
void BM_Convolve(benchmark::State& state) {
  const auto taps = SpeedGaussianTaps();
  for (auto _ : state) benchmark::DoNotOptimize(Fn(Frame1080(), taps));
}
BENCHMARK(BM_Convolve<kernels::reference::ConvolveSeparable>)->Name("convolve/reference");
BENCHMARK(BM_Convolve<kernels::parallel::ConvolveSeparable>)->Name("convolve/parallel");

template <Plane (*Fn)(const Plane&)>
void BM_Downsample(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Fn(Frame1080()));
}
BENCHMARK(BM_Downsample<kernels::reference::BoxDownsample2>)->Name("downsample/reference");
BENCHMARK(BM_Downsample<kernels::parallel::BoxDownsample2>)->Name("downsample/parallel");

template <std::vector<double> (*Fn)(const Plane&, int, long*)>
void BM_PatchMoment(benchmark::State& state) {
  static const Plane map = ComputeMsMap(Frame1080()).values;
  long count = 0;
  for (auto _ : state) benchmark::DoNotOptimize(Fn(map, 5, &count));
}
BENCHMARK(BM_PatchMoment<kernels::reference::PatchSecondMoment>)
    ->Name("patch_moment/reference")
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PatchMoment<kernels::parallel::PatchSecondMoment>)
    ->Name("patch_moment/parallel")
    ->Unit(benchmark::kMillisecond);

template <Plane (*Fn)(const Plane&, int)>
void BM_BlockEnergy(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Fn(Frame1080(), 5));
}
BENCHMARK(BM_BlockEnergy<kernels::reference::BlockEnergy>)->Name("block_energy/reference");
BENCHMARK(BM_BlockEnergy<kernels::parallel::BlockEnergy>)->Name("block_energy/parallel");

FrameSequence Clip(bool distorted) {
  FrameSequence s;
  s.frame_rate = 25.0;
  for (const auto& f : testing::MovingClip(480, 270, 6, 11)) {
    s.frames.push_back(distorted ? testing::AddNoise(testing::GaussianBlur(f, 1.0), 3.0, 5)
                                 : f);
  }
  return s;
}

template <FeatureTable (*Fn)(const FrameSequence&, const FrameSequence&,
                             const ExtractorConfig&)>
void BM_Extract(benchmark::State& state) {
  static const FrameSequence ref = Clip(false), dist = Clip(true);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(ref, dist, {}));
}
BENCHMARK(BM_Extract<ExtractFeaturesSerial>)
    ->Name("extract_6x480x270/serial")
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Extract<ExtractFeatures>)
    ->Name("extract_6x480x270/parallel")
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace vqf

BENCHMARK_MAIN();
