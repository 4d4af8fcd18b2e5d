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

#ifndef VQF_KERNELS_H_
#define VQF_KERNELS_H_

#include <span>
#include <vector>

#include "vqf/plane.h"

// Data-parallel inner loops shared by every feature. Each kernel exists twice:
// `reference` is the plain serial loop nest kept as the test oracle, and
// `parallel` is the OpenMP version the library calls. Both produce
// bit-identical output for any thread count: parallel loops only split work
// across independent output rows, and every reduction is finished serially
// in a fixed order.

namespace vqf::kernels {

// Index into [0, n) with half-sample symmetric reflection (d c b a | a b c d).
// Valid while the overhang is at most n.
inline int Reflect(int i, int n) {
  if (i < 0) return -i - 1;
  if (i >= n) return 2 * n - i - 1;
  return i;
}

namespace reference {

// Separable convolution with an odd-length symmetric tap vector; borders are
// reflected. Requires taps.size() / 2 <= min(width, height).
Plane ConvolveSeparable(const Plane& plane, std::span<const double> taps);

// One 2x2 box-average reduction (floor(w/2) x floor(h/2)).
Plane BoxDownsample2(const Plane& plane);

// Upper triangle (row-major, i <= j) of the sum over every stride-1 b x b
// patch of v v^T, where v is the row-major patch vector. Also returns the
// number of patches through `count`.
std::vector<double> PatchSecondMoment(const Plane& map, int block,
                                      long* count);

// Per non-overlapping b x b block: sum of squares / b^2.
Plane BlockEnergy(const Plane& map, int block);

}  // namespace reference

namespace parallel {

Plane ConvolveSeparable(const Plane& plane, std::span<const double> taps);
Plane BoxDownsample2(const Plane& plane);
std::vector<double> PatchSecondMoment(const Plane& map, int block,
                                      long* count);
Plane BlockEnergy(const Plane& map, int block);

}  // namespace parallel

}  // namespace vqf::kernels

#endif  // VQF_KERNELS_H_
