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

#include "vqf/evaluation.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include <Eigen/Dense>

#include "text_util.h"
#include "vqf/errors.h"

namespace vqf {
namespace {

constexpr int kMaxLogisticIterations = 10'000;
constexpr double kFisherClamp = 0.999999;

void CheckPair(std::span<const double> a, std::span<const double> b,
               std::size_t min_n) {
  if (a.size() != b.size()) {
    throw EvaluationError("length mismatch: " + std::to_string(a.size()) +
                          " vs " + std::to_string(b.size()));
  }
  if (a.size() < min_n) {
    throw EvaluationError("need at least " + std::to_string(min_n) +
                          " points, got " + std::to_string(a.size()));
  }
}

double Mean(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double Sse(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double StdDev(std::span<const double> v) {
  const double m = Mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size()));
}

double Sigmoid(double u) { return 1.0 / (1.0 + std::exp(-u)); }

// Levenberg-Marquardt on the 4-parameter logistic. Returns the iteration
// count; `beta` holds the best parameters seen.
int FitLogisticLm(std::span<const double> x, std::span<const double> y,
                  std::array<double, 4>& beta, bool* diverged) {
  const std::size_t n = x.size();
  auto sse_of = [&](const std::array<double, 4>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = LogisticCurve(b, x[i]) - y[i];
      s += r * r;
    }
    return s;
  };
  double sse = sse_of(beta);
  double lambda = 1e-3;
  int stalled = 0;
  int iter = 0;
  *diverged = !std::isfinite(sse);
  for (; iter < kMaxLogisticIterations && !*diverged; ++iter) {
    Eigen::Matrix4d jtj = Eigen::Matrix4d::Zero();
    Eigen::Vector4d jtr = Eigen::Vector4d::Zero();
    const double scale = std::abs(beta[3]);
    const double sign = beta[3] < 0.0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double u = (x[i] - beta[2]) / scale;
      const double s = Sigmoid(u);
      const double ds = s * (1.0 - s);
      const double range = beta[0] - beta[1];
      Eigen::Vector4d g;
      g << s, 1.0 - s, -range * ds / scale, -range * ds * u / scale * sign;
      const double r = beta[1] + range * s - y[i];
      jtj += g * g.transpose();
      jtr += g * r;
    }
    bool improved = false;
    while (lambda < 1e20) {
      Eigen::Matrix4d a = jtj;
      for (int k = 0; k < 4; ++k) a(k, k) += lambda * std::max(jtj(k, k), 1e-12);
      const Eigen::Vector4d step = a.ldlt().solve(-jtr);
      std::array<double, 4> trial = beta;
      for (int k = 0; k < 4; ++k) trial[k] += step[k];
      if (trial[3] == 0.0) trial[3] = beta[3];
      const double trial_sse = sse_of(trial);
      if (std::isfinite(trial_sse) && trial_sse < sse) {
        const double gain = (sse - trial_sse) / std::max(sse, 1e-300);
        beta = trial;
        sse = trial_sse;
        lambda = std::max(lambda / 10.0, 1e-15);
        improved = true;
        stalled = gain < 1e-14 ? stalled + 1 : 0;
        break;
      }
      lambda *= 10.0;
    }
    if (!improved || stalled >= 5 || sse == 0.0) break;
  }
  for (double b : beta) {
    if (!std::isfinite(b)) *diverged = true;
  }
  return iter;
}

// Inversions (i < j with v[i] > v[j]) by merge sort.
long CountInversions(std::vector<double>& v, std::vector<double>& tmp,
                     std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  long count = CountInversions(v, tmp, lo, mid) + CountInversions(v, tmp, mid, hi);
  std::size_t i = lo;
  std::size_t j = mid;
  std::size_t k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      count += static_cast<long>(mid - i);
      tmp[k++] = v[j++];
    } else {
      tmp[k++] = v[i++];
    }
  }
  while (i < mid) tmp[k++] = v[i++];
  while (j < hi) tmp[k++] = v[j++];
  std::copy(tmp.begin() + lo, tmp.begin() + hi, v.begin() + lo);
  return count;
}

long Inversions(std::vector<double> v) {
  std::vector<double> tmp(v.size());
  return CountInversions(v, tmp, 0, v.size());
}

const char* AxisName(AuditAxis axis) {
  return axis == AuditAxis::kCrf ? "crf" : "resolution";
}

}  // namespace

std::vector<double> AverageRanks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double Pearson(std::span<const double> a, std::span<const double> b) {
  CheckPair(a, b, 3);
  const double ma = Mean(a);
  const double mb = Mean(b);
  double sab = 0.0;
  double saa = 0.0;
  double sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  if (!(saa > 0.0) || !(sbb > 0.0)) {
    throw EvaluationError("correlation undefined for a constant input");
  }
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

double Srocc(std::span<const double> pred, std::span<const double> mos) {
  CheckPair(pred, mos, 3);
  const auto rp = AverageRanks(pred);
  const auto rm = AverageRanks(mos);
  return Pearson(rp, rm);
}

double LogisticCurve(const std::array<double, 4>& beta, double x) {
  return beta[1] + (beta[0] - beta[1]) * Sigmoid((x - beta[2]) / std::abs(beta[3]));
}

double LogisticFit::Apply(double x) const {
  return linear_fallback ? intercept + slope * x : LogisticCurve(beta, x);
}

LogisticFit FitLogistic(std::span<const double> pred,
                        std::span<const double> mos) {
  CheckPair(pred, mos, 5);
  LogisticFit fit;

  // Affine least-squares line: the fallback, and the bar the logistic must beat.
  const double mx = Mean(pred);
  const double my = Mean(mos);
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    sxy += (pred[i] - mx) * (mos[i] - my);
    sxx += (pred[i] - mx) * (pred[i] - mx);
  }
  const double slope = sxx > 0.0 ? sxy / sxx : 0.0;
  const double intercept = my - slope * mx;
  std::vector<double> linear(pred.size());
  for (std::size_t i = 0; i < pred.size(); ++i) linear[i] = intercept + slope * pred[i];

  auto use_linear = [&](std::string why) {
    fit.linear_fallback = true;
    fit.slope = slope;
    fit.intercept = intercept;
    fit.mapped = linear;
    fit.warning = std::move(why);
    return fit;
  };

  const double mos_max = *std::max_element(mos.begin(), mos.end());
  const double mos_min = *std::min_element(mos.begin(), mos.end());
  const double spread = StdDev(pred);
  if (!(mos_max > mos_min) || !(spread > 0.0)) {
    return use_linear("degenerate input (constant scores); linear fit used");
  }

  std::array<double, 4> beta = {mos_max, mos_min, Median({pred.begin(), pred.end()}),
                                spread};
  if (sxy < 0.0) std::swap(beta[0], beta[1]);
  bool diverged = false;
  fit.iterations = FitLogisticLm(pred, mos, beta, &diverged);
  if (diverged) return use_linear("logistic fit diverged; linear fit used");

  fit.beta = beta;
  fit.mapped.resize(pred.size());
  for (std::size_t i = 0; i < pred.size(); ++i) {
    fit.mapped[i] = LogisticCurve(beta, pred[i]);
  }
  if (Sse(fit.mapped, mos) > Sse(linear, mos)) {
    const int iters = fit.iterations;
    use_linear("logistic fit did not improve on the linear fit; linear fit used");
    fit.iterations = iters;
  }
  return fit;
}

PlccRmse ComputePlccRmse(std::span<const double> mapped,
                         std::span<const double> mos) {
  CheckPair(mapped, mos, 3);
  PlccRmse out;
  out.plcc = Pearson(mapped, mos);
  out.rmse = std::sqrt(Sse(mapped, mos) / static_cast<double>(mos.size()));
  return out;
}

FisherResult FisherAggregate(std::span<const double> correlations) {
  if (correlations.empty()) {
    throw EvaluationError("no correlations to aggregate");
  }
  FisherResult out;
  double z = 0.0;
  for (double r : correlations) {
    if (!std::isfinite(r)) throw EvaluationError("non-finite correlation");
    if (std::abs(r) >= 1.0) {
      r = std::copysign(kFisherClamp, r);
      out.clamped = true;
    }
    z += 0.5 * std::log((1.0 + r) / (1.0 - r));
  }
  out.value = std::tanh(z / static_cast<double>(correlations.size()));
  return out;
}

EvalReport Evaluate(const std::vector<DatasetScores>& datasets) {
  EvalReport report;
  std::vector<double> sroccs;
  std::vector<double> plccs;
  for (const auto& ds : datasets) {
    DatasetResult res;
    res.name = ds.name;
    res.n = ds.pred.size();
    try {
      res.srocc = Srocc(ds.pred, ds.mos);
      res.logistic = FitLogistic(ds.pred, ds.mos);
      const auto pr = ComputePlccRmse(res.logistic.mapped, ds.mos);
      res.plcc = pr.plcc;
      res.rmse = pr.rmse;
      sroccs.push_back(res.srocc);
      plccs.push_back(res.plcc);
    } catch (const EvaluationError& e) {
      res.error = e.what();
    }
    report.datasets.push_back(std::move(res));
  }
  if (!sroccs.empty()) {
    const auto s = FisherAggregate(sroccs);
    const auto p = FisherAggregate(plccs);
    report.aggregate_srocc = s.value;
    report.aggregate_plcc = p.value;
    report.fisher_clamped = s.clamped || p.clamped;
    report.aggregate_valid = true;
  }
  return report;
}

void WriteReportTable(std::ostream& out, const EvalReport& report) {
  std::ostringstream s;
  s << std::left << std::setw(20) << "dataset" << std::right << std::setw(6)
    << "n" << std::setw(10) << "SROCC" << std::setw(10) << "PLCC"
    << std::setw(10) << "RMSE" << '\n';
  s << std::fixed << std::setprecision(4);
  for (const auto& d : report.datasets) {
    s << std::left << std::setw(20) << d.name << std::right << std::setw(6) << d.n;
    if (!d.error.empty()) {
      s << "  error: " << d.error << '\n';
      continue;
    }
    s << std::setw(10) << d.srocc << std::setw(10) << d.plcc << std::setw(10)
      << d.rmse;
    if (d.logistic.linear_fallback) s << "  (" << d.logistic.warning << ")";
    s << '\n';
  }
  if (report.aggregate_valid) {
    s << std::left << std::setw(20) << "aggregate" << std::right << std::setw(6)
      << "" << std::setw(10) << report.aggregate_srocc << std::setw(10)
      << report.aggregate_plcc << '\n';
  }
  out << s.str();
}

void WriteReportKeyValues(std::ostream& out, const EvalReport& report) {
  using text::FormatDouble;
  for (const auto& d : report.datasets) {
    const std::string p = "dataset." + d.name + ".";
    out << p << "n = " << d.n << '\n';
    if (!d.error.empty()) {
      out << p << "error = " << d.error << '\n';
      continue;
    }
    out << p << "srocc = " << FormatDouble(d.srocc) << '\n';
    out << p << "plcc = " << FormatDouble(d.plcc) << '\n';
    out << p << "rmse = " << FormatDouble(d.rmse) << '\n';
    out << p << "mapping = " << (d.logistic.linear_fallback ? "linear" : "logistic")
        << '\n';
    if (d.logistic.linear_fallback) {
      out << p << "slope = " << FormatDouble(d.logistic.slope) << '\n';
      out << p << "intercept = " << FormatDouble(d.logistic.intercept) << '\n';
      out << p << "warning = " << d.logistic.warning << '\n';
    } else {
      for (int k = 0; k < 4; ++k) {
        out << p << "beta" << k + 1 << " = " << FormatDouble(d.logistic.beta[k])
            << '\n';
      }
    }
  }
  if (report.aggregate_valid) {
    out << "aggregate.srocc = " << FormatDouble(report.aggregate_srocc) << '\n';
    out << "aggregate.plcc = " << FormatDouble(report.aggregate_plcc) << '\n';
    if (report.fisher_clamped) {
      out << "aggregate.warning = correlation of magnitude 1 clamped before "
             "Fisher averaging\n";
    }
  }
}

ScoreGrid::ScoreGrid(std::vector<double> resolutions, std::vector<double> crfs,
                     std::vector<double> scores)
    : resolutions_(std::move(resolutions)),
      crfs_(std::move(crfs)),
      scores_(std::move(scores)) {
  if (resolutions_.empty() || crfs_.empty()) throw AuditError("empty score grid");
  if (scores_.size() != resolutions_.size() * crfs_.size()) {
    throw AuditError("score grid is incomplete");
  }
  if (!std::is_sorted(resolutions_.begin(), resolutions_.end()) ||
      !std::is_sorted(crfs_.begin(), crfs_.end())) {
    throw AuditError("grid axes must be ascending");
  }
}

ScoreGrid ScoreGrid::FromCells(const std::vector<GridCell>& cells) {
  if (cells.empty()) throw AuditError("no grid cells");
  std::map<std::pair<double, double>, double> by_coord;
  std::vector<double> res;
  std::vector<double> crf;
  for (const auto& c : cells) {
    if (!by_coord.emplace(std::pair{c.resolution, c.crf}, c.score).second) {
      throw AuditError("duplicate grid cell (resolution " +
                       text::FormatDouble(c.resolution) + ", crf " +
                       text::FormatDouble(c.crf) + ")");
    }
    res.push_back(c.resolution);
    crf.push_back(c.crf);
  }
  for (auto* axis : {&res, &crf}) {
    std::sort(axis->begin(), axis->end());
    axis->erase(std::unique(axis->begin(), axis->end()), axis->end());
  }
  std::vector<double> scores;
  std::string missing;
  for (double r : res) {
    for (double c : crf) {
      auto it = by_coord.find({r, c});
      if (it == by_coord.end()) {
        missing += " (" + text::FormatDouble(r) + ", " + text::FormatDouble(c) + ")";
        scores.push_back(0.0);
      } else {
        scores.push_back(it->second);
      }
    }
  }
  if (!missing.empty()) {
    throw AuditError("grid is missing cells (resolution, crf):" + missing);
  }
  return ScoreGrid(std::move(res), std::move(crf), std::move(scores));
}

AuditReport MonotonicityAudit(const ScoreGrid& grid) {
  AuditReport report;
  const std::size_t nr = grid.resolutions().size();
  const std::size_t nc = grid.crfs().size();
  for (std::size_t r = 0; r < nr; ++r) {
    std::vector<double> negated(nc);
    for (std::size_t c = 0; c < nc; ++c) {
      negated[c] = -grid.at(r, c);
      if (c + 1 < nc && grid.at(r, c + 1) > grid.at(r, c)) {
        report.violations.push_back({AuditAxis::kCrf, r, c, c + 1,
                                     grid.at(r, c + 1) - grid.at(r, c)});
      }
    }
    report.lines.push_back({AuditAxis::kCrf, r, Inversions(std::move(negated))});
  }
  for (std::size_t c = 0; c < nc; ++c) {
    std::vector<double> column(nr);
    for (std::size_t r = 0; r < nr; ++r) {
      column[r] = grid.at(r, c);
      if (r + 1 < nr && grid.at(r + 1, c) < grid.at(r, c)) {
        report.violations.push_back({AuditAxis::kResolution, c, r, r + 1,
                                     grid.at(r, c) - grid.at(r + 1, c)});
      }
    }
    report.lines.push_back({AuditAxis::kResolution, c, Inversions(std::move(column))});
  }
  return report;
}

void WriteGridCsv(std::ostream& out, const ScoreGrid& grid) {
  out << "resolution,crf,score\n";
  for (std::size_t r = 0; r < grid.resolutions().size(); ++r) {
    for (std::size_t c = 0; c < grid.crfs().size(); ++c) {
      out << text::FormatDouble(grid.resolutions()[r]) << ','
          << text::FormatDouble(grid.crfs()[c]) << ','
          << text::FormatDouble(grid.at(r, c)) << '\n';
    }
  }
}

void WriteAuditReport(std::ostream& out, const ScoreGrid& grid,
                      const AuditReport& report) {
  using text::FormatDouble;
  out << "violations = " << report.violations.size() << '\n';
  for (const auto& v : report.violations) {
    const bool along_crf = v.axis == AuditAxis::kCrf;
    const auto& fixed = along_crf ? grid.resolutions() : grid.crfs();
    const auto& moving = along_crf ? grid.crfs() : grid.resolutions();
    out << "violation axis=" << AxisName(v.axis) << ' '
        << (along_crf ? "resolution=" : "crf=") << FormatDouble(fixed[v.fixed_index])
        << " pair=" << FormatDouble(moving[v.first]) << ':'
        << FormatDouble(moving[v.second]) << " magnitude=" << FormatDouble(v.magnitude)
        << '\n';
  }
  for (const auto& l : report.lines) {
    const bool along_crf = l.axis == AuditAxis::kCrf;
    out << "line axis=" << AxisName(l.axis) << ' '
        << (along_crf ? "resolution=" : "crf=")
        << FormatDouble((along_crf ? grid.resolutions() : grid.crfs())[l.fixed_index])
        << " discordant_pairs=" << l.discordant_pairs << '\n';
  }
}

}  // namespace vqf
