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

#ifndef VQF_VIDEO_IO_H_
#define VQF_VIDEO_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "vqf/plane.h"

namespace vqf {

// Smallest scale-0 frame accepted by the loaders.
inline constexpr int kMinFrameDimension = 64;

enum class PixelFormat {
  kYuv420p8,   // "yuv420p8b", planar 4:2:0, one byte per sample
  kYuv420p10,  // "yuv420p10b", planar 4:2:0, little-endian 16-bit words
};

// Accepts "yuv420p8b"/"yuv420p" and "yuv420p10b"/"yuv420p10le".
// Throws ConfigError for anything else.
PixelFormat ParsePixelFormat(std::string_view descriptor);
std::string_view PixelFormatName(PixelFormat format);

// Bytes occupied by one frame (luma plus both chroma planes).
std::size_t FrameByteSize(PixelFormat format, int width, int height);

struct FrameSequence {
  std::vector<LumaPlane> frames;
  double frame_rate = 0.0;
  std::string source_path;

  int width() const { return frames.empty() ? 0 : frames.front().width(); }
  int height() const { return frames.empty() ? 0 : frames.front().height(); }
  std::size_t size() const { return frames.size(); }
};

// Reads a headerless planar file. 10-bit code values are divided by 4 so
// every frame lands on the 8-bit scale. Chroma is skipped.
FrameSequence LoadRawVideo(const std::filesystem::path& path,
                           PixelFormat format, int width, int height,
                           double frame_rate);

// Reads a YUV4MPEG2 stream. Accepts C420, C420jpeg, C420paldv, C420mpeg2 and
// C420p10; a missing C tag means C420. Width, height and rate come from the
// header.
FrameSequence LoadY4m(const std::filesystem::path& path);

// Dispatches on extension: ".y4m" is self-describing, anything else is raw
// and needs the explicit geometry.
FrameSequence LoadVideo(const std::filesystem::path& path, PixelFormat format,
                        int width, int height, double frame_rate);

// Writers used by tests and synthetic-data tooling. Samples are rounded and
// clamped to [0, 255]; chroma is written as mid-grey (128).
void WriteRawYuv420p8(const std::filesystem::path& path,
                      const std::vector<LumaPlane>& frames);
void WriteY4m(const std::filesystem::path& path,
              const std::vector<LumaPlane>& frames, int fps_num, int fps_den);

// next - curr, element-wise.
DiffPlane FrameDifference(const LumaPlane& next, const LumaPlane& curr);

// Applies `scale` successive 2x2 box reductions. Odd trailing rows/columns
// are dropped at every step. Throws ScaleError once a reduction would leave
// an empty plane.
Plane DyadicDownsample(const Plane& plane, int scale);

}  // namespace vqf

#endif  // VQF_VIDEO_IO_H_
