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

#ifndef VQF_EVALUATION_H_
#define VQF_EVALUATION_H_

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace vqf {

// Ranks starting at 1; tied values share the mean of their positions.
std::vector<double> AverageRanks(std::span<const double> values);

// Throw EvaluationError for length mismatch, fewer than 3 points, or a
// constant input.
double Pearson(std::span<const double> a, std::span<const double> b);
double Srocc(std::span<const double> pred, std::span<const double> mos);

// q(x) = b2 + (b1 - b2) / (1 + exp(-(x - b3) / |b4|))
double LogisticCurve(const std::array<double, 4>& beta, double x);

struct LogisticFit {
  std::array<double, 4> beta{};
  bool linear_fallback = false;
  double slope = 0.0;  // used when linear_fallback
  double intercept = 0.0;
  int iterations = 0;
  std::string warning;
  std::vector<double> mapped;  // fitted predictions

  double Apply(double x) const;
};

// Least-squares fit of the 4-parameter logistic by Levenberg-Marquardt
// (at most 10^4 iterations) from b1 = max mos, b2 = min mos, b3 = median
// pred, b4 = std pred, with b1/b2 swapped for a decreasing relation. The
// affine least-squares line replaces the logistic, with a warning, whenever
// the logistic diverges, the input is degenerate, or the line fits better.
LogisticFit FitLogistic(std::span<const double> pred,
                        std::span<const double> mos);

struct PlccRmse {
  double plcc = 0.0;
  double rmse = 0.0;
};
PlccRmse ComputePlccRmse(std::span<const double> mapped,
                         std::span<const double> mos);

struct FisherResult {
  double value = 0.0;
  bool clamped = false;  // some |r| >= 1 was pulled back to 0.999999
};

// tanh(mean(atanh(r_i))).
FisherResult FisherAggregate(std::span<const double> correlations);

// One dataset's predictions against its subjective scores.
struct DatasetScores {
  std::string name;
  std::vector<double> pred;
  std::vector<double> mos;
};

struct DatasetResult {
  std::string name;
  std::size_t n = 0;
  double srocc = 0.0;
  double plcc = 0.0;
  double rmse = 0.0;
  LogisticFit logistic;
  std::string error;  // non-empty when the metrics are undefined
};

struct EvalReport {
  std::vector<DatasetResult> datasets;
  double aggregate_srocc = 0.0;
  double aggregate_plcc = 0.0;
  bool aggregate_valid = false;
  bool fisher_clamped = false;
};

// Failures inside one dataset are recorded in its `error` and excluded from
// the aggregate; the remaining datasets are still evaluated.
EvalReport Evaluate(const std::vector<DatasetScores>& datasets);

void WriteReportTable(std::ostream& out, const EvalReport& report);
void WriteReportKeyValues(std::ostream& out, const EvalReport& report);

// Pooled scores indexed by (encoding resolution, compression level). Both
// axes are kept in ascending order; a larger CRF means heavier compression.
struct GridCell {
  double resolution = 0.0;
  double crf = 0.0;
  double score = 0.0;
};

class ScoreGrid {
 public:
  // Throws AuditError for an empty cell list, duplicate cells, or missing
  // (resolution, crf) combinations (all listed in the message).
  static ScoreGrid FromCells(const std::vector<GridCell>& cells);
  ScoreGrid(std::vector<double> resolutions, std::vector<double> crfs,
            std::vector<double> scores);

  const std::vector<double>& resolutions() const { return resolutions_; }
  const std::vector<double>& crfs() const { return crfs_; }
  double at(std::size_t r, std::size_t c) const {
    return scores_[r * crfs_.size() + c];
  }

 private:
  std::vector<double> resolutions_;
  std::vector<double> crfs_;
  std::vector<double> scores_;  // row-major, resolution rows
};

enum class AuditAxis {
  kCrf,         // along CRF at a fixed resolution; score must not increase
  kResolution,  // along resolution at a fixed CRF; score must not decrease
};

struct MonotonicityViolation {
  AuditAxis axis;
  std::size_t fixed_index;  // row (resolution) or column (crf) held fixed
  std::size_t first;        // adjacent pair along the moving axis
  std::size_t second;
  double magnitude;         // size of the wrong-way step, > 0
};

struct LineAudit {
  AuditAxis axis;
  std::size_t fixed_index;
  long discordant_pairs;  // all ordered pairs on the line in the wrong order
};

struct AuditReport {
  std::vector<MonotonicityViolation> violations;  // adjacent pairs only
  std::vector<LineAudit> lines;
  bool monotone() const { return violations.empty(); }
};

AuditReport MonotonicityAudit(const ScoreGrid& grid);

// Long-format "resolution,crf,score" rows for plotting.
void WriteGridCsv(std::ostream& out, const ScoreGrid& grid);
void WriteAuditReport(std::ostream& out, const ScoreGrid& grid,
                      const AuditReport& report);

}  // namespace vqf

#endif  // VQF_EVALUATION_H_
