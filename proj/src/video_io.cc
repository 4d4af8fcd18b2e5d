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

#include "vqf/video_io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "vqf/errors.h"
#include "vqf/kernels.h"

namespace vqf {
namespace {

int BytesPerSample(PixelFormat format) {
  return format == PixelFormat::kYuv420p10 ? 2 : 1;
}

void CheckGeometry(int width, int height, double frame_rate) {
  if (width < kMinFrameDimension || height < kMinFrameDimension) {
    throw ScaleError("frame " + std::to_string(width) + "x" +
                     std::to_string(height) + " is below the " +
                     std::to_string(kMinFrameDimension) + "x" +
                     std::to_string(kMinFrameDimension) + " minimum");
  }
  if (!(frame_rate > 0.0) || !std::isfinite(frame_rate)) {
    throw ConfigError("frame rate must be positive");
  }
}

LumaPlane DecodeLuma(const unsigned char* data, PixelFormat format, int width,
                     int height) {
  std::vector<double> samples(static_cast<std::size_t>(width) * height);
  if (format == PixelFormat::kYuv420p8) {
    for (std::size_t i = 0; i < samples.size(); ++i) samples[i] = data[i];
  } else {
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const unsigned code = data[2 * i] | (unsigned{data[2 * i + 1]} << 8);
      samples[i] = static_cast<double>(code & 0x3ffu) / 4.0;
    }
  }
  return LumaPlane(width, height, std::move(samples));
}

std::ifstream OpenForRead(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DecodeError("cannot open " + path.string());
  return in;
}

int ParseInt(std::string_view text, const std::filesystem::path& path) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw DecodeError(path.string() + ": bad y4m header field '" +
                      std::string(text) + "'");
  }
  return value;
}

std::vector<unsigned char> EncodeFrame8(const LumaPlane& frame) {
  const std::size_t luma = frame.size();
  const std::size_t chroma = static_cast<std::size_t>((frame.width() + 1) / 2) *
                             ((frame.height() + 1) / 2);
  std::vector<unsigned char> bytes(luma + 2 * chroma, 128);
  const auto s = frame.samples();
  for (std::size_t i = 0; i < luma; ++i) {
    bytes[i] = static_cast<unsigned char>(
        std::clamp(std::lround(s[i]), 0L, 255L));
  }
  return bytes;
}

}  // namespace

PixelFormat ParsePixelFormat(std::string_view descriptor) {
  if (descriptor == "yuv420p8b" || descriptor == "yuv420p") {
    return PixelFormat::kYuv420p8;
  }
  if (descriptor == "yuv420p10b" || descriptor == "yuv420p10le") {
    return PixelFormat::kYuv420p10;
  }
  throw ConfigError("unsupported pixel format '" + std::string(descriptor) +
                    "'");
}

std::string_view PixelFormatName(PixelFormat format) {
  return format == PixelFormat::kYuv420p10 ? "yuv420p10b" : "yuv420p8b";
}

std::size_t FrameByteSize(PixelFormat format, int width, int height) {
  const std::size_t luma = static_cast<std::size_t>(width) * height;
  const std::size_t chroma =
      static_cast<std::size_t>((width + 1) / 2) * ((height + 1) / 2);
  return (luma + 2 * chroma) * BytesPerSample(format);
}

FrameSequence LoadRawVideo(const std::filesystem::path& path,
                           PixelFormat format, int width, int height,
                           double frame_rate) {
  CheckGeometry(width, height, frame_rate);
  std::error_code ec;
  const auto bytes = std::filesystem::file_size(path, ec);
  if (ec) throw DecodeError("cannot stat " + path.string() + ": " + ec.message());
  const std::size_t frame_bytes = FrameByteSize(format, width, height);
  if (bytes == 0 || bytes % frame_bytes != 0) {
    const auto frames = bytes / frame_bytes;
    throw DecodeError(path.string() + ": size " + std::to_string(bytes) +
                      " bytes is not a multiple of the " +
                      std::to_string(frame_bytes) +
                      "-byte frame; expected " +
                      std::to_string((frames + 1) * frame_bytes) +
                      " bytes for " + std::to_string(frames + 1) + " frames");
  }
  auto in = OpenForRead(path);
  FrameSequence seq;
  seq.frame_rate = frame_rate;
  seq.source_path = path.string();
  std::vector<unsigned char> buffer(frame_bytes);
  for (std::uintmax_t f = 0; f < bytes / frame_bytes; ++f) {
    if (!in.read(reinterpret_cast<char*>(buffer.data()),
                 static_cast<std::streamsize>(frame_bytes))) {
      throw DecodeError(path.string() + ": short read at frame " +
                        std::to_string(f));
    }
    seq.frames.push_back(DecodeLuma(buffer.data(), format, width, height));
  }
  return seq;
}

FrameSequence LoadY4m(const std::filesystem::path& path) {
  auto in = OpenForRead(path);
  std::string header;
  if (!std::getline(in, header)) {
    throw DecodeError(path.string() + ": empty file");
  }
  std::istringstream tokens(header);
  std::string magic;
  tokens >> magic;
  if (magic != "YUV4MPEG2") {
    throw DecodeError(path.string() + ": missing YUV4MPEG2 signature");
  }
  int width = 0;
  int height = 0;
  int rate_num = 0;
  int rate_den = 1;
  PixelFormat format = PixelFormat::kYuv420p8;
  std::string token;
  while (tokens >> token) {
    const std::string_view value = std::string_view(token).substr(1);
    switch (token[0]) {
      case 'W':
        width = ParseInt(value, path);
        break;
      case 'H':
        height = ParseInt(value, path);
        break;
      case 'F': {
        const auto colon = value.find(':');
        if (colon == std::string_view::npos) {
          throw DecodeError(path.string() + ": bad frame rate '" + token + "'");
        }
        rate_num = ParseInt(value.substr(0, colon), path);
        rate_den = ParseInt(value.substr(colon + 1), path);
        break;
      }
      case 'C':
        if (value == "420" || value == "420jpeg" || value == "420paldv" ||
            value == "420mpeg2") {
          format = PixelFormat::kYuv420p8;
        } else if (value == "420p10") {
          format = PixelFormat::kYuv420p10;
        } else {
          throw ConfigError(path.string() + ": unsupported y4m colorspace '" +
                            token + "'");
        }
        break;
      default:
        break;  // interlacing, aspect and X tags carry nothing we use
    }
  }
  if (rate_den <= 0) throw DecodeError(path.string() + ": bad frame rate");
  const double frame_rate = static_cast<double>(rate_num) / rate_den;
  CheckGeometry(width, height, frame_rate);

  const std::size_t frame_bytes = FrameByteSize(format, width, height);
  FrameSequence seq;
  seq.frame_rate = frame_rate;
  seq.source_path = path.string();
  std::vector<unsigned char> buffer(frame_bytes);
  std::string marker;
  while (std::getline(in, marker)) {
    if (marker.rfind("FRAME", 0) != 0) {
      throw DecodeError(path.string() + ": expected FRAME marker before frame " +
                        std::to_string(seq.frames.size()));
    }
    if (!in.read(reinterpret_cast<char*>(buffer.data()),
                 static_cast<std::streamsize>(frame_bytes))) {
      throw DecodeError(path.string() + ": frame " +
                        std::to_string(seq.frames.size()) + " truncated; " +
                        "expected " + std::to_string(frame_bytes) +
                        " bytes, got " + std::to_string(in.gcount()));
    }
    seq.frames.push_back(DecodeLuma(buffer.data(), format, width, height));
  }
  if (seq.frames.empty()) {
    throw DecodeError(path.string() + ": no frames");
  }
  return seq;
}

FrameSequence LoadVideo(const std::filesystem::path& path, PixelFormat format,
                        int width, int height, double frame_rate) {
  if (path.extension() == ".y4m") return LoadY4m(path);
  return LoadRawVideo(path, format, width, height, frame_rate);
}

void WriteRawYuv420p8(const std::filesystem::path& path,
                      const std::vector<LumaPlane>& frames) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DecodeError("cannot write " + path.string());
  for (const auto& frame : frames) {
    const auto bytes = EncodeFrame8(frame);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
  }
  if (!out) throw DecodeError("write failed for " + path.string());
}

void WriteY4m(const std::filesystem::path& path,
              const std::vector<LumaPlane>& frames, int fps_num, int fps_den) {
  if (frames.empty()) throw ContractViolation("no frames to write");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DecodeError("cannot write " + path.string());
  out << "YUV4MPEG2 W" << frames.front().width() << " H"
      << frames.front().height() << " F" << fps_num << ":" << fps_den
      << " Ip A1:1 C420jpeg\n";
  for (const auto& frame : frames) {
    const auto bytes = EncodeFrame8(frame);
    out << "FRAME\n";
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
  }
  if (!out) throw DecodeError("write failed for " + path.string());
}

DiffPlane FrameDifference(const LumaPlane& next, const LumaPlane& curr) {
  if (!next.SameShape(curr)) {
    throw ContractViolation("frame difference of mismatched planes");
  }
  DiffPlane out(next.width(), next.height());
  const auto a = next.samples();
  const auto b = curr.samples();
  auto d = out.samples();
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a[i] - b[i];
  return out;
}

Plane DyadicDownsample(const Plane& plane, int scale) {
  if (scale < 0) throw ContractViolation("negative scale index");
  Plane out = plane;
  for (int k = 0; k < scale; ++k) out = kernels::parallel::BoxDownsample2(out);
  return out;
}

}  // namespace vqf
