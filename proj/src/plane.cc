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

#include "vqf/plane.h"

#include <string>

#include "vqf/errors.h"

namespace vqf {

Plane::Plane(int width, int height, double fill)
    : width_(width),
      height_(height),
      samples_(static_cast<std::size_t>(width < 0 ? 0 : width) *
                   (height < 0 ? 0 : height),
               fill) {
  if (width < 0 || height < 0) {
    throw ContractViolation("negative plane dimensions");
  }
}

Plane::Plane(int width, int height, std::vector<double> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
  if (width < 0 || height < 0 ||
      samples_.size() != static_cast<std::size_t>(width) * height) {
    throw ContractViolation("plane " + std::to_string(width) + "x" +
                            std::to_string(height) + " given " +
                            std::to_string(samples_.size()) + " samples");
  }
}

}  // namespace vqf
