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

#include "vqf/elementary_features.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "vqf/errors.h"
#include "vqf/kernels.h"

namespace vqf {
namespace {

// pywt "db2" decomposition filters.
constexpr std::array<double, 4> kDb2Low = {
    -0.12940952255092145, 0.22414386804185735, 0.836516303737469,
    0.48296291314469025};
constexpr std::array<double, 4> kDb2High = {
    -0.48296291314469025, 0.836516303737469, -0.22414386804185735,
    -0.12940952255092145};

// cos^2 of one degree.
constexpr double kCosOneDegreeSq = 0.99969541350954794;

Plane Decimate2(const Plane& plane) {
  const int w = plane.width() / 2;
  const int h = plane.height() / 2;
  if (w < 1 || h < 1) throw ScaleError("VIF pyramid ran out of samples");
  Plane out(w, h);
  for (int y = 0; y < h; ++y) {
    const auto in = plane.row(2 * y);
    auto dst = out.row(y);
    for (int x = 0; x < w; ++x) dst[x] = in[2 * x];
  }
  return out;
}

Plane Product(const Plane& a, const Plane& b) {
  Plane out(a.width(), a.height());
  const auto x = a.samples();
  const auto y = b.samples();
  auto d = out.samples();
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = x[i] * y[i];
  return out;
}

Plane Shifted(const Plane& p, double offset) {
  Plane out = p;
  for (auto& v : out.samples()) v -= offset;
  return out;
}

std::array<double, kVifScales> VifAllScales(const Plane& ref, const Plane& dist,
                                            const VifParams& params) {
  if (!ref.SameShape(dist)) {
    throw ContractViolation("VIF inputs differ in size");
  }
  const auto ref_pyr = VifPyramid(ref, params);
  const auto dist_pyr = VifPyramid(dist, params);
  std::array<double, kVifScales> out{};
  for (int k = 0; k < kVifScales; ++k) {
    out[k] = VifScale(ref_pyr[k], dist_pyr[k], k, params).value_or(1.0);
  }
  return out;
}

// One analysis step along rows: low and high halves, ceil(n/2) samples each.
void AnalyzeLine(std::span<const double> in, std::span<double> low,
                 std::span<double> high) {
  const int n = static_cast<int>(in.size());
  for (std::size_t i = 0; i < low.size(); ++i) {
    double lo = 0.0;
    double hi = 0.0;
    for (int j = 0; j < 4; ++j) {
      const double v = in[kernels::Reflect(2 * static_cast<int>(i) + j - 1, n)];
      lo += kDb2Low[j] * v;
      hi += kDb2High[j] * v;
    }
    low[i] = lo;
    high[i] = hi;
  }
}

Plane Transposed(const Plane& p) {
  Plane out(p.height(), p.width());
  for (int y = 0; y < p.height(); ++y) {
    for (int x = 0; x < p.width(); ++x) out.at(x, y) = p.at(y, x);
  }
  return out;
}

// Splits every row into (low, high) planes of width ceil(w/2).
std::pair<Plane, Plane> AnalyzeRows(const Plane& p) {
  const int half = (p.width() + 1) / 2;
  Plane low(half, p.height());
  Plane high(half, p.height());
  for (int y = 0; y < p.height(); ++y) AnalyzeLine(p.row(y), low.row(y), high.row(y));
  return {std::move(low), std::move(high)};
}

}  // namespace

std::vector<double> VifWindow(int scale, const VifParams& params) {
  const double sigma =
      std::max(params.sigma0 / std::pow(2.0, scale), params.min_sigma);
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> taps(2 * radius + 1);
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    taps[i + radius] = std::exp(-(i * i) / (2.0 * sigma * sigma));
    sum += taps[i + radius];
  }
  for (auto& t : taps) t /= sum;
  return taps;
}

std::vector<Plane> VifPyramid(const Plane& plane, const VifParams& params) {
  std::vector<Plane> pyramid;
  pyramid.reserve(kVifScales);
  pyramid.push_back(plane);
  for (int k = 1; k < kVifScales; ++k) {
    const auto taps = VifWindow(k - 1, params);
    pyramid.push_back(Decimate2(
        kernels::parallel::ConvolveSeparable(pyramid.back(), taps)));
  }
  return pyramid;
}

std::optional<double> VifScale(const Plane& ref, const Plane& dist, int scale,
                               const VifParams& params) {
  if (!ref.SameShape(dist)) {
    throw ContractViolation("VIF inputs differ in size");
  }
  const auto taps = VifWindow(scale, params);
  if (ref.width() < static_cast<int>(taps.size()) ||
      ref.height() < static_cast<int>(taps.size())) {
    throw ScaleError("scale " + std::to_string(scale) + " plane " +
                     std::to_string(ref.width()) + "x" +
                     std::to_string(ref.height()) + " is smaller than the " +
                     std::to_string(taps.size()) + "-tap window");
  }
  // Centre both inputs on the reference mean: moments are unchanged and the
  // second moments lose less precision to cancellation.
  double mean = 0.0;
  for (double v : ref.samples()) mean += v;
  mean /= static_cast<double>(ref.size());
  const Plane x = Shifted(ref, mean);
  const Plane y = Shifted(dist, mean);

  using kernels::parallel::ConvolveSeparable;
  const Plane mu_x = ConvolveSeparable(x, taps);
  const Plane mu_y = ConvolveSeparable(y, taps);
  const Plane xx = ConvolveSeparable(Product(x, x), taps);
  const Plane yy = ConvolveSeparable(Product(y, y), taps);
  const Plane xy = ConvolveSeparable(Product(x, y), taps);

  const double eps = params.epsilon;
  const double sn = params.sensor_noise;
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double mx = mu_x.samples()[i];
    const double my = mu_y.samples()[i];
    double sx = std::max(xx.samples()[i] - mx * mx, 0.0);
    const double sy = std::max(yy.samples()[i] - my * my, 0.0);
    const double sxy = xy.samples()[i] - mx * my;
    if (sx < eps) sx = 0.0;
    const double g = std::max(sxy / (sx + eps), 0.0);
    const double sv = std::max(sy - g * sxy, 0.0);
    num += std::log1p(g * g * sx / (sv + sn));
    den += std::log1p(sx / sn);
  }
  if (!(den > 0.0)) return std::nullopt;
  return num / den;
}

std::array<double, kVifScales> SpatialVif(const Plane& ref_frame,
                                          const Plane& dist_frame,
                                          const VifParams& params) {
  return VifAllScales(ref_frame, dist_frame, params);
}

std::array<double, kVifScales> TemporalVif(const Plane& ref_diff,
                                           const Plane& dist_diff,
                                           const VifParams& params) {
  return VifAllScales(ref_diff, dist_diff, params);
}

WaveletBands Db2Decompose(const Plane& plane) {
  if (plane.width() < 2 || plane.height() < 2) {
    throw ScaleError("wavelet step needs at least 2x2 samples");
  }
  auto [low, high] = AnalyzeRows(plane);
  auto [ll, lh] = AnalyzeRows(Transposed(low));
  auto [hl, hh] = AnalyzeRows(Transposed(high));
  WaveletBands bands;
  bands.approx = Transposed(ll);
  bands.horizontal = Transposed(lh);  // low along x, high along y
  bands.vertical = Transposed(hl);    // high along x, low along y
  bands.diagonal = Transposed(hh);
  return bands;
}

// Reference detail below this (cube-rooted, code-value units) counts as none.
constexpr double kDlmFlatThreshold = 1e-6;

std::optional<double> DlmRatio(const Plane& ref, const Plane& dist,
                               const DlmParams& params) {
  if (!ref.SameShape(dist)) {
    throw ContractViolation("DLM inputs differ in size");
  }
  constexpr int kMin = 1 << kDlmLevels;
  if (ref.width() < kMin || ref.height() < kMin) {
    throw ScaleError("DLM needs at least " + std::to_string(kMin) + "x" +
                     std::to_string(kMin) + " frames");
  }
  Plane ref_approx = ref;
  Plane dist_approx = dist;
  double num = 0.0;
  double den = 0.0;
  for (int level = 0; level < kDlmLevels; ++level) {
    WaveletBands o = Db2Decompose(ref_approx);
    WaveletBands t = Db2Decompose(dist_approx);
    const int w = o.horizontal.width();
    const int h = o.horizontal.height();
    const int cx = std::min(2, (w - 1) / 2);
    const int cy = std::min(2, (h - 1) / 2);
    double restored = 0.0;
    double original = 0.0;
    for (int y = cy; y < h - cy; ++y) {
      for (int x = cx; x < w - cx; ++x) {
        const double oh = o.horizontal.at(y, x);
        const double ov = o.vertical.at(y, x);
        const double od = o.diagonal.at(y, x);
        const double th = t.horizontal.at(y, x);
        const double tv = t.vertical.at(y, x);
        const double td = t.diagonal.at(y, x);
        const double dot = oh * th + ov * tv;
        const bool same_angle =
            dot >= 0.0 &&
            dot * dot >= kCosOneDegreeSq * (oh * oh + ov * ov) * (th * th + tv * tv);
        for (const auto& [oc, tc] : {std::pair{oh, th}, {ov, tv}, {od, td}}) {
          double r;
          if (same_angle) {
            r = tc;
          } else {
            const double gain = oc == 0.0 ? 0.0 : std::clamp(tc / oc, 0.0, 1.0);
            r = gain * oc;
          }
          restored += std::abs(r * r * r);
          original += std::abs(oc * oc * oc);
        }
      }
    }
    num += params.level_weights[level] * std::cbrt(restored);
    den += params.level_weights[level] * std::cbrt(original);
    ref_approx = std::move(o.approx);
    dist_approx = std::move(t.approx);
  }
  // A flat reference leaves only rounding residue in the detail bands.
  if (!(den > kDlmFlatThreshold)) return std::nullopt;
  return num / den;
}

double Dlm(const Plane& ref_frame, const Plane& dist_frame,
           const DlmParams& params) {
  return DlmRatio(ref_frame, dist_frame, params).value_or(1.0);
}

double TemporalInformation(const Plane& curr, const Plane& next) {
  if (!curr.SameShape(next)) {
    throw ContractViolation("TI inputs differ in size");
  }
  const auto a = curr.samples();
  const auto b = next.samples();
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(b[i] - a[i]);
  return a.empty() ? 0.0 : sum / static_cast<double>(a.size());
}

}  // namespace vqf
