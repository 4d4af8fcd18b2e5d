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

#include "synthetic.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include <unistd.h>

#include "vqf/video_io.h"

namespace vqf::testing {
namespace {

std::vector<double> GaussianTaps(double sigma) {
  const int r = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
  std::vector<double> taps(2 * r + 1);
  double sum = 0.0;
  for (int i = -r; i <= r; ++i) {
    taps[i + r] = std::exp(-0.5 * i * i / (sigma * sigma));
    sum += taps[i + r];
  }
  for (double& t : taps) t /= sum;
  return taps;
}

// Direct separable convolution with reflected borders, independent of the
// library kernels.
Plane Convolve(const Plane& p, const std::vector<double>& taps) {
  const int r = static_cast<int>(taps.size()) / 2;
  auto reflect = [](int i, int n) {
    while (i < 0 || i >= n) i = i < 0 ? -i - 1 : 2 * n - i - 1;
    return i;
  };
  Plane tmp(p.width(), p.height());
  for (int y = 0; y < p.height(); ++y) {
    for (int x = 0; x < p.width(); ++x) {
      double s = 0.0;
      for (int k = -r; k <= r; ++k) s += taps[k + r] * p.at(y, reflect(x + k, p.width()));
      tmp.at(y, x) = s;
    }
  }
  Plane out(p.width(), p.height());
  for (int y = 0; y < p.height(); ++y) {
    for (int x = 0; x < p.width(); ++x) {
      double s = 0.0;
      for (int k = -r; k <= r; ++k) s += taps[k + r] * tmp.at(reflect(y + k, p.height()), x);
      out.at(y, x) = s;
    }
  }
  return out;
}

}  // namespace

Plane TexturedFrame(int width, int height, std::uint64_t seed, double shift) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  // Noise is generated on a wider canvas so panning reveals new content
  // rather than wrapping.
  const int pad = 64;
  Plane noise(width + pad, height);
  for (double& v : noise.samples()) v = u(rng) - 0.5;
  noise = Convolve(noise, GaussianTaps(1.2));

  struct Wave {
    double fx, fy, amp, phase;
  };
  std::vector<Wave> waves;
  for (int i = 0; i < 4; ++i) {
    const double theta = u(rng) * std::numbers::pi;
    const double f = 0.03 + 0.15 * u(rng);
    waves.push_back({f * std::cos(theta), f * std::sin(theta), 12.0 + 18.0 * u(rng),
                     2.0 * std::numbers::pi * u(rng)});
  }
  const int offset = static_cast<int>(std::floor(shift));
  Plane out(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double xs = x + shift;
      double v = 128.0;
      for (const auto& w : waves) {
        v += w.amp * std::sin(2.0 * std::numbers::pi * (w.fx * xs + w.fy * y) + w.phase);
      }
      const int nx = std::clamp(x + offset, 0, width + pad - 1);
      v += 140.0 * noise.at(y, nx);
      out.at(y, x) = std::clamp(v, 16.0, 235.0);
    }
  }
  return out;
}

std::vector<Plane> MovingClip(int width, int height, int frames, std::uint64_t seed) {
  std::vector<Plane> clip;
  for (int i = 0; i < frames; ++i) clip.push_back(TexturedFrame(width, height, seed, i));
  return clip;
}

std::vector<Plane> StaticClip(int width, int height, int frames, std::uint64_t seed) {
  return std::vector<Plane>(frames, TexturedFrame(width, height, seed));
}

std::vector<Plane> NoiseClip(int width, int height, int frames, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(16.0, 235.0);
  std::vector<Plane> clip;
  for (int i = 0; i < frames; ++i) {
    Plane p(width, height);
    for (double& v : p.samples()) v = u(rng);
    clip.push_back(std::move(p));
  }
  return clip;
}

std::vector<Plane> GradientClip(int width, int height, int frames) {
  std::vector<Plane> clip;
  for (int i = 0; i < frames; ++i) {
    Plane p(width, height);
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        p.at(y, x) = 20.0 + 180.0 * x / (width - 1) + 0.3 * y + i;
      }
    }
    clip.push_back(std::move(p));
  }
  return clip;
}

Plane GaussianBlur(const Plane& p, double sigma) {
  if (sigma <= 0.0) return p;
  return Convolve(p, GaussianTaps(sigma));
}

Plane Quantize(const Plane& p, double step) {
  Plane out = p;
  for (double& v : out.samples()) v = step * std::round(v / step);
  return out;
}

Plane AddNoise(const Plane& p, double sigma, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, sigma);
  Plane out = p;
  for (double& v : out.samples()) v += n(rng);
  return out;
}

Plane Clamp8(const Plane& p) {
  Plane out = p;
  for (double& v : out.samples()) v = std::clamp(v, 0.0, 255.0);
  return out;
}

Plane Round8(const Plane& p) {
  Plane out = p;
  for (double& v : out.samples()) v = std::clamp(std::round(v), 0.0, 255.0);
  return out;
}

std::vector<Plane> Round8(const std::vector<Plane>& frames) {
  std::vector<Plane> out;
  for (const auto& f : frames) out.push_back(Round8(f));
  return out;
}

Plane GsmField(int size, int block, std::uint64_t seed, Eigen::MatrixXd* k0) {
  static constexpr double kH[3][3] = {{1.0, 0.5, 0.2}, {0.4, 0.8, 0.1}, {0.3, 0.2, 0.6}};
  double energy = 0.0;
  for (const auto& row : kH) {
    for (double h : row) energy += h * h;
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Plane white(size + 2, size + 2);
  for (double& v : white.samples()) v = normal(rng);
  Plane u(size, size);
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      double s = 0.0;
      for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) s += kH[a][b] * white.at(y + a, x + b);
      }
      u.at(y, x) = s / std::sqrt(energy);
    }
  }

  // Slowly varying log-normal multiplier: blurred white noise, standardized.
  Plane g(size, size);
  for (double& v : g.samples()) v = normal(rng);
  g = GaussianBlur(g, 16.0);
  double mean = 0.0, var = 0.0;
  for (double v : g.samples()) mean += v;
  mean /= static_cast<double>(g.size());
  for (double v : g.samples()) var += (v - mean) * (v - mean);
  const double sd = std::sqrt(var / static_cast<double>(g.size()));
  Plane c(size, size);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double s = 3.0 * std::exp(0.5 * (g.samples()[i] - mean) / sd);
    c.samples()[i] = s * u.samples()[i];
  }

  if (k0) {
    const int n = block * block;
    auto autocov = [&](int dy, int dx) {
      double s = 0.0;
      for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
          const int a2 = a + dy, b2 = b + dx;
          if (a2 >= 0 && a2 < 3 && b2 >= 0 && b2 < 3) s += kH[a][b] * kH[a2][b2];
        }
      }
      return s / energy;
    };
    k0->resize(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        (*k0)(i, j) = autocov(j / block - i / block, j % block - i % block);
      }
    }
  }
  return c;
}

RegressionData RbfRegressionData(int n, int dim, double gamma, std::uint64_t seed,
                                 std::uint64_t function_seed) {
  std::mt19937_64 frng(function_seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::vector<double>> centers(6, std::vector<double>(dim));
  std::vector<double> beta(centers.size());
  for (std::size_t j = 0; j < centers.size(); ++j) {
    for (double& c : centers[j]) c = u(frng);
    beta[j] = 40.0 * (u(frng) - 0.3);
  }
  std::mt19937_64 rng(seed);
  RegressionData d;
  for (int i = 0; i < n; ++i) {
    std::vector<double> x(dim);
    for (double& v : x) v = u(rng);
    double y = 50.0;
    for (std::size_t j = 0; j < centers.size(); ++j) {
      double d2 = 0.0;
      for (int k = 0; k < dim; ++k) d2 += (x[k] - centers[j][k]) * (x[k] - centers[j][k]);
      y += beta[j] * std::exp(-gamma * d2);
    }
    d.x.push_back(std::move(x));
    d.y.push_back(y);
  }
  return d;
}

Plane Degrade(const Plane& p, double blur_sigma, double step) {
  return Round8(Quantize(blur_sigma > 0.0 ? GaussianBlur(p, blur_sigma) : p, step));
}

std::vector<CorpusVideo> WriteCorpus(const std::filesystem::path& dir, int contents,
                                     int severities, int width, int height,
                                     int frames) {
  std::vector<CorpusVideo> out;
  for (int c = 0; c < contents; ++c) {
    const auto ref = Round8(MovingClip(width, height, frames, 1000 + 17 * c));
    const std::string id = "c" + std::to_string(c);
    const auto ref_path = dir / (id + "_ref.y4m");
    WriteY4m(ref_path, ref, 25, 1);
    for (int k = 1; k <= severities; ++k) {
      std::vector<Plane> dist;
      for (const auto& f : ref) dist.push_back(Degrade(f, 0.4 * k, 3.0 * k));
      CorpusVideo v;
      v.content_id = id;
      v.ref = ref_path;
      v.dist = dir / (id + "_s" + std::to_string(k) + ".y4m");
      v.content = c;
      v.severity = k;
      v.mos = 85.0 - 12.0 * k + 4.0 * c;
      WriteY4m(v.dist, dist, 25, 1);
      out.push_back(v);
    }
  }
  return out;
}

std::string ManifestCsv(const std::vector<CorpusVideo>& videos) {
  std::ostringstream s;
  s << "content_id,ref_path,dist_path,width,height,pix_fmt,fps,mos\n";
  for (const auto& v : videos) {
    s << v.content_id << ',' << v.ref.string() << ',' << v.dist.string() << ",,,,,"
      << v.mos << '\n';
  }
  return s.str();
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  path_ = std::filesystem::temp_directory_path() /
          ("vqf_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
  std::filesystem::remove_all(path_);
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << contents;
}

}  // namespace vqf::testing
