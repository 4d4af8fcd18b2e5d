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

#include "vqf/kernels.h"

#include <cstddef>

#include "vqf/errors.h"

namespace vqf::kernels {
namespace {

// The per-row bodies are shared so the serial and OpenMP drivers perform the
// same floating-point operations in the same order.

void HorizontalRow(std::span<const double> src, std::span<double> dst,
                   std::span<const double> taps) {
  const int width = static_cast<int>(src.size());
  const int radius = static_cast<int>(taps.size()) / 2;
  for (int x = 0; x < width; ++x) {
    double acc = 0.0;
    for (int k = 0; k < static_cast<int>(taps.size()); ++k) {
      acc += taps[k] * src[Reflect(x + k - radius, width)];
    }
    dst[x] = acc;
  }
}

void VerticalRow(const Plane& src, int y, std::span<double> dst,
                 std::span<const double> taps) {
  const int height = src.height();
  const int radius = static_cast<int>(taps.size()) / 2;
  for (int x = 0; x < src.width(); ++x) dst[x] = 0.0;
  for (int k = 0; k < static_cast<int>(taps.size()); ++k) {
    const auto in = src.row(Reflect(y + k - radius, height));
    const double w = taps[k];
    for (int x = 0; x < src.width(); ++x) dst[x] += w * in[x];
  }
}

void CheckTaps(const Plane& plane, std::span<const double> taps) {
  const int radius = static_cast<int>(taps.size()) / 2;
  if (taps.size() % 2 == 0) {
    throw ContractViolation("convolution taps must have odd length");
  }
  if (plane.width() < radius || plane.height() < radius || plane.empty()) {
    throw ScaleError("plane " + std::to_string(plane.width()) + "x" +
                     std::to_string(plane.height()) +
                     " is smaller than the filter radius " +
                     std::to_string(radius));
  }
}

void DownsampleRow(const Plane& src, int y, std::span<double> dst) {
  const auto top = src.row(2 * y);
  const auto bottom = src.row(2 * y + 1);
  for (std::size_t x = 0; x < dst.size(); ++x) {
    dst[x] = (top[2 * x] + top[2 * x + 1] + bottom[2 * x] +
              bottom[2 * x + 1]) *
             0.25;
  }
}

Plane DownsampleShape(const Plane& plane) {
  const int w = plane.width() / 2;
  const int h = plane.height() / 2;
  if (w < 1 || h < 1) {
    throw ScaleError("cannot halve a " + std::to_string(plane.width()) + "x" +
                     std::to_string(plane.height()) + " plane");
  }
  return Plane(w, h);
}

std::size_t TriangleSize(int block) {
  const std::size_t n = static_cast<std::size_t>(block) * block;
  return n * (n + 1) / 2;
}

void CheckBlock(const Plane& map, int block) {
  if (block < 1) throw ContractViolation("block size must be positive");
  if (map.width() < block || map.height() < block) {
    throw ScaleError("map " + std::to_string(map.width()) + "x" +
                     std::to_string(map.height()) +
                     " holds no full " + std::to_string(block) + "x" +
                     std::to_string(block) + " block");
  }
}

// Sum of v v^T over every patch whose top edge is at row y0.
void PatchRowMoment(const Plane& map, int block, int y0,
                    std::span<double> tri) {
  const int n = block * block;
  std::vector<double> v(n);
  for (auto& t : tri) t = 0.0;
  for (int x0 = 0; x0 + block <= map.width(); ++x0) {
    for (int dy = 0; dy < block; ++dy) {
      const auto r = map.row(y0 + dy);
      for (int dx = 0; dx < block; ++dx) v[dy * block + dx] = r[x0 + dx];
    }
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i) {
      const double vi = v[i];
      for (int j = i; j < n; ++j) tri[idx++] += vi * v[j];
    }
  }
}

std::vector<double> ReduceRows(const std::vector<double>& partials,
                               std::size_t rows, std::size_t tri_size) {
  std::vector<double> total(tri_size, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    const double* p = partials.data() + r * tri_size;
    for (std::size_t k = 0; k < tri_size; ++k) total[k] += p[k];
  }
  return total;
}

void BlockEnergyRow(const Plane& map, int block, int by,
                    std::span<double> dst) {
  const double inv_n = 1.0 / (static_cast<double>(block) * block);
  for (std::size_t bx = 0; bx < dst.size(); ++bx) {
    double acc = 0.0;
    for (int dy = 0; dy < block; ++dy) {
      const auto r = map.row(by * block + dy);
      for (int dx = 0; dx < block; ++dx) {
        const double c = r[bx * block + dx];
        acc += c * c;
      }
    }
    dst[bx] = acc * inv_n;
  }
}

}  // namespace

namespace reference {

Plane ConvolveSeparable(const Plane& plane, std::span<const double> taps) {
  CheckTaps(plane, taps);
  Plane tmp(plane.width(), plane.height());
  for (int y = 0; y < plane.height(); ++y) {
    HorizontalRow(plane.row(y), tmp.row(y), taps);
  }
  Plane out(plane.width(), plane.height());
  for (int y = 0; y < plane.height(); ++y) VerticalRow(tmp, y, out.row(y), taps);
  return out;
}

Plane BoxDownsample2(const Plane& plane) {
  Plane out = DownsampleShape(plane);
  for (int y = 0; y < out.height(); ++y) DownsampleRow(plane, y, out.row(y));
  return out;
}

std::vector<double> PatchSecondMoment(const Plane& map, int block,
                                      long* count) {
  CheckBlock(map, block);
  const std::size_t rows = map.height() - block + 1;
  const std::size_t tri_size = TriangleSize(block);
  std::vector<double> partials(rows * tri_size);
  for (std::size_t y0 = 0; y0 < rows; ++y0) {
    PatchRowMoment(map, block, static_cast<int>(y0),
                   std::span(partials).subspan(y0 * tri_size, tri_size));
  }
  if (count) *count = static_cast<long>(rows) * (map.width() - block + 1);
  return ReduceRows(partials, rows, tri_size);
}

Plane BlockEnergy(const Plane& map, int block) {
  CheckBlock(map, block);
  Plane out(map.width() / block, map.height() / block);
  for (int by = 0; by < out.height(); ++by) {
    BlockEnergyRow(map, block, by, out.row(by));
  }
  return out;
}

}  // namespace reference

namespace parallel {

Plane ConvolveSeparable(const Plane& plane, std::span<const double> taps) {
  CheckTaps(plane, taps);
  const int height = plane.height();
  Plane tmp(plane.width(), height);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < height; ++y) {
    HorizontalRow(plane.row(y), tmp.row(y), taps);
  }
  Plane out(plane.width(), height);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < height; ++y) VerticalRow(tmp, y, out.row(y), taps);
  return out;
}

Plane BoxDownsample2(const Plane& plane) {
  Plane out = DownsampleShape(plane);
  const int height = out.height();
#pragma omp parallel for schedule(static)
  for (int y = 0; y < height; ++y) DownsampleRow(plane, y, out.row(y));
  return out;
}

std::vector<double> PatchSecondMoment(const Plane& map, int block,
                                      long* count) {
  CheckBlock(map, block);
  const int rows = map.height() - block + 1;
  const std::size_t tri_size = TriangleSize(block);
  std::vector<double> partials(static_cast<std::size_t>(rows) * tri_size);
#pragma omp parallel for schedule(static)
  for (int y0 = 0; y0 < rows; ++y0) {
    PatchRowMoment(map, block, y0,
                   std::span(partials).subspan(y0 * tri_size, tri_size));
  }
  if (count) *count = static_cast<long>(rows) * (map.width() - block + 1);
  return ReduceRows(partials, rows, tri_size);
}

Plane BlockEnergy(const Plane& map, int block) {
  CheckBlock(map, block);
  Plane out(map.width() / block, map.height() / block);
  const int height = out.height();
#pragma omp parallel for schedule(static)
  for (int by = 0; by < height; ++by) {
    BlockEnergyRow(map, block, by, out.row(by));
  }
  return out;
}

}  // namespace parallel

}  // namespace vqf::kernels
