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

#ifndef VQF_PLANE_H_
#define VQF_PLANE_H_

#include <cstddef>
#include <span>
#include <vector>

namespace vqf {

// A row-major grid of real samples. Used for luma frames (LumaPlane), frame
// differences (DiffPlane), mean-subtracted maps and per-block grids alike;
// the distinction is carried by the operation, not the storage.
class Plane {
 public:
  Plane() = default;
  Plane(int width, int height, double fill = 0.0);
  Plane(int width, int height, std::vector<double> samples);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }

  double& at(int y, int x) { return samples_[Index(y, x)]; }
  double at(int y, int x) const { return samples_[Index(y, x)]; }

  std::span<double> row(int y) {
    return {samples_.data() + static_cast<std::size_t>(y) * width_,
            static_cast<std::size_t>(width_)};
  }
  std::span<const double> row(int y) const {
    return {samples_.data() + static_cast<std::size_t>(y) * width_,
            static_cast<std::size_t>(width_)};
  }

  std::span<double> samples() { return samples_; }
  std::span<const double> samples() const { return samples_; }

  bool SameShape(const Plane& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const Plane&, const Plane&) = default;

 private:
  std::size_t Index(int y, int x) const {
    return static_cast<std::size_t>(y) * width_ + x;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<double> samples_;
};

using LumaPlane = Plane;
using DiffPlane = Plane;

}  // namespace vqf

#endif  // VQF_PLANE_H_
