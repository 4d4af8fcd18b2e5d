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

#include "vqf/svr.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "text_util.h"
#include "vqf/errors.h"

namespace vqf {
namespace {

constexpr std::string_view kMagic = "vqfusion-svr-model";
constexpr double kTau = 1e-12;

double RbfKernel(std::span<const double> a, std::span<const double> b,
                 double gamma) {
  double d2 = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    d2 += d * d;
  }
  return std::exp(-gamma * d2);
}

// Dual variables are laid out as [alpha_0..alpha_{l-1}, alpha*_0..alpha*_{l-1}]
// with labels +1 and -1 respectively, following the usual SMO formulation
//   min 1/2 a^T Q a + p^T a   s.t. y^T a = 0, 0 <= a <= C.
class SmoSolver {
 public:
  SmoSolver(std::vector<double> kernel, std::span<const double> targets,
            const SvrParams& params)
      : l_(targets.size()),
        kernel_(std::move(kernel)),
        cost_(params.cost),
        alpha_(2 * l_, 0.0),
        grad_(2 * l_),
        y_(2 * l_) {
    for (std::size_t i = 0; i < l_; ++i) {
      y_[i] = 1;
      y_[i + l_] = -1;
      grad_[i] = params.epsilon - targets[i];
      grad_[i + l_] = params.epsilon + targets[i];
    }
  }

  long Solve(double tolerance, long max_iterations) {
    for (long iter = 0; iter < max_iterations; ++iter) {
      std::size_t i = 0;
      std::size_t j = 0;
      if (SelectWorkingSet(tolerance, &i, &j)) return iter;
      Update(i, j);
    }
    throw NumericalError("SVR solver did not converge within " +
                         std::to_string(max_iterations) + " iterations");
  }

  double Rho() const {
    double ub = std::numeric_limits<double>::infinity();
    double lb = -std::numeric_limits<double>::infinity();
    double sum_free = 0.0;
    long free = 0;
    for (std::size_t t = 0; t < 2 * l_; ++t) {
      const double yg = y_[t] * grad_[t];
      if (AtUpper(t)) {
        if (y_[t] == -1) ub = std::min(ub, yg); else lb = std::max(lb, yg);
      } else if (AtLower(t)) {
        if (y_[t] == +1) ub = std::min(ub, yg); else lb = std::max(lb, yg);
      } else {
        ++free;
        sum_free += yg;
      }
    }
    return free > 0 ? sum_free / static_cast<double>(free) : (ub + lb) / 2.0;
  }

  double Coefficient(std::size_t i) const { return alpha_[i] - alpha_[i + l_]; }

 private:
  double K(std::size_t a, std::size_t b) const {
    return kernel_[(a % l_) * l_ + (b % l_)];
  }
  double Q(std::size_t a, std::size_t b) const { return y_[a] * y_[b] * K(a, b); }
  bool AtUpper(std::size_t t) const { return alpha_[t] >= cost_; }
  bool AtLower(std::size_t t) const { return alpha_[t] <= 0.0; }
  bool InUp(std::size_t t) const {
    return (y_[t] == +1 && !AtUpper(t)) || (y_[t] == -1 && !AtLower(t));
  }
  bool InLow(std::size_t t) const {
    return (y_[t] == +1 && !AtLower(t)) || (y_[t] == -1 && !AtUpper(t));
  }

  // Returns true when the KKT gap is below tolerance.
  bool SelectWorkingSet(double tolerance, std::size_t* out_i,
                        std::size_t* out_j) const {
    double gmax = -std::numeric_limits<double>::infinity();
    std::size_t i = 2 * l_;
    for (std::size_t t = 0; t < 2 * l_; ++t) {
      if (InUp(t) && -y_[t] * grad_[t] >= gmax) {
        gmax = -y_[t] * grad_[t];
        i = t;
      }
    }
    double gmax2 = -std::numeric_limits<double>::infinity();
    double best = std::numeric_limits<double>::infinity();
    std::size_t j = 2 * l_;
    for (std::size_t t = 0; t < 2 * l_; ++t) {
      if (!InLow(t)) continue;
      gmax2 = std::max(gmax2, y_[t] * grad_[t]);
      if (i == 2 * l_) continue;
      const double b = gmax + y_[t] * grad_[t];
      if (b > 0.0) {
        double a = K(i, i) + K(t, t) - 2.0 * y_[i] * y_[t] * Q(i, t);
        if (a <= 0.0) a = kTau;
        const double obj = -(b * b) / a;
        if (obj <= best) {
          best = obj;
          j = t;
        }
      }
    }
    if (gmax + gmax2 < tolerance || i == 2 * l_ || j == 2 * l_) return true;
    *out_i = i;
    *out_j = j;
    return false;
  }

  void Update(std::size_t i, std::size_t j) {
    const double c = cost_;
    const double old_i = alpha_[i];
    const double old_j = alpha_[j];
    const double qij = Q(i, j);
    double& ai = alpha_[i];
    double& aj = alpha_[j];
    if (y_[i] != y_[j]) {
      double quad = K(i, i) + K(j, j) + 2.0 * qij;
      if (quad <= 0.0) quad = kTau;
      const double delta = (-grad_[i] - grad_[j]) / quad;
      const double diff = ai - aj;
      ai += delta;
      aj += delta;
      if (diff > 0.0) {
        if (aj < 0.0) { aj = 0.0; ai = diff; }
      } else {
        if (ai < 0.0) { ai = 0.0; aj = -diff; }
      }
      if (diff > 0.0) {
        if (ai > c) { ai = c; aj = c - diff; }
      } else {
        if (aj > c) { aj = c; ai = c + diff; }
      }
    } else {
      double quad = K(i, i) + K(j, j) - 2.0 * qij;
      if (quad <= 0.0) quad = kTau;
      const double delta = (grad_[i] - grad_[j]) / quad;
      const double sum = ai + aj;
      ai -= delta;
      aj += delta;
      if (sum > c) {
        if (ai > c) { ai = c; aj = sum - c; }
      } else {
        if (aj < 0.0) { aj = 0.0; ai = sum; }
      }
      if (sum > c) {
        if (aj > c) { aj = c; ai = sum - c; }
      } else {
        if (ai < 0.0) { ai = 0.0; aj = sum; }
      }
    }
    const double di = ai - old_i;
    const double dj = aj - old_j;
    for (std::size_t t = 0; t < 2 * l_; ++t) {
      grad_[t] += Q(i, t) * di + Q(j, t) * dj;
    }
  }

  std::size_t l_;
  std::vector<double> kernel_;
  double cost_;
  std::vector<double> alpha_;
  std::vector<double> grad_;
  std::vector<int> y_;
};

std::vector<std::string> Tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

}  // namespace

std::vector<double> RegressionModel::Normalize(std::span<const double> raw) const {
  if (raw.size() != num_features()) {
    throw ContractViolation("model '" + layout + "' expects " +
                            std::to_string(num_features()) + " features, got " +
                            std::to_string(raw.size()));
  }
  std::vector<double> out(raw.size());
  for (std::size_t k = 0; k < raw.size(); ++k) {
    const double span = feature_max[k] - feature_min[k];
    out[k] = span > 0.0 ? (raw[k] - feature_min[k]) / span : 0.0;
  }
  return out;
}

double RegressionModel::Predict(std::span<const double> raw,
                                bool clip_output) const {
  auto x = Normalize(raw);
  for (auto& v : x) v = std::clamp(v, 0.0, 1.0);
  double sum = 0.0;
  for (std::size_t s = 0; s < support_vectors.size(); ++s) {
    sum += coefficients[s] * RbfKernel(support_vectors[s], x, params.gamma);
  }
  const double score = sum - rho;
  return clip_output ? std::clamp(score, score_min, score_max) : score;
}

RegressionModel TrainSvr(const std::vector<std::vector<double>>& features,
                         std::span<const double> targets,
                         const SvrParams& params, std::string layout,
                         std::vector<std::string> feature_names) {
  const std::size_t l = features.size();
  if (l != targets.size()) {
    throw ContractViolation("feature rows and targets differ in count");
  }
  if (!(params.cost > 0.0) || !(params.gamma > 0.0) || params.epsilon < 0.0) {
    throw ConfigError("SVR needs C > 0, gamma > 0 and epsilon >= 0");
  }
  const std::size_t d = feature_names.size();
  for (const auto& row : features) {
    if (row.size() != d) {
      throw ContractViolation("feature row width differs from layout width");
    }
    for (double v : row) {
      if (!std::isfinite(v)) throw NumericalError("non-finite training feature");
    }
  }
  for (double t : targets) {
    if (!std::isfinite(t)) throw NumericalError("non-finite training target");
  }
  bool distinct = false;
  for (std::size_t i = 1; i < l && !distinct; ++i) {
    distinct = features[i] != features[0] || targets[i] != targets[0];
  }
  if (l < 2 || !distinct) {
    throw NumericalError("SVR training needs at least 2 distinct samples, got " +
                         std::to_string(l));
  }

  RegressionModel model;
  model.layout = std::move(layout);
  model.feature_names = std::move(feature_names);
  model.params = params;
  model.feature_min.assign(d, std::numeric_limits<double>::infinity());
  model.feature_max.assign(d, -std::numeric_limits<double>::infinity());
  for (const auto& row : features) {
    for (std::size_t k = 0; k < d; ++k) {
      model.feature_min[k] = std::min(model.feature_min[k], row[k]);
      model.feature_max[k] = std::max(model.feature_max[k], row[k]);
    }
  }
  for (std::size_t k = 0; k < d; ++k) {
    if (!(model.feature_max[k] > model.feature_min[k])) {
      model.warnings.push_back("feature " + model.feature_names[k] +
                               " is constant in the training set");
    }
  }
  model.score_min = *std::min_element(targets.begin(), targets.end());
  model.score_max = *std::max_element(targets.begin(), targets.end());

  std::vector<std::vector<double>> x(l);
  for (std::size_t i = 0; i < l; ++i) x[i] = model.Normalize(features[i]);
  std::vector<double> kernel(l * l);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      kernel[i * l + j] = RbfKernel(x[i], x[j], params.gamma);
    }
  }

  SmoSolver solver(std::move(kernel), targets, params);
  model.iterations = solver.Solve(params.tolerance, params.max_iterations);
  model.rho = solver.Rho();
  for (std::size_t i = 0; i < l; ++i) {
    const double coef = solver.Coefficient(i);
    if (coef != 0.0) {
      model.support_vectors.push_back(x[i]);
      model.coefficients.push_back(coef);
    }
  }
  return model;
}

void SaveModel(std::ostream& out, const RegressionModel& m) {
  using text::FormatDouble;
  out << kMagic << '\n';
  out << "format_version " << RegressionModel::kFormatVersion << '\n';
  out << "layout " << m.layout << '\n';
  out << "kernel rbf\n";
  out << "C " << FormatDouble(m.params.cost) << '\n';
  out << "gamma " << FormatDouble(m.params.gamma) << '\n';
  out << "epsilon " << FormatDouble(m.params.epsilon) << '\n';
  out << "tolerance " << FormatDouble(m.params.tolerance) << '\n';
  out << "max_iterations " << m.params.max_iterations << '\n';
  out << "rho " << FormatDouble(m.rho) << '\n';
  out << "score_min " << FormatDouble(m.score_min) << '\n';
  out << "score_max " << FormatDouble(m.score_max) << '\n';
  out << "iterations " << m.iterations << '\n';
  out << "num_features " << m.num_features() << '\n';
  for (std::size_t k = 0; k < m.num_features(); ++k) {
    out << "feature " << m.feature_names[k] << ' '
        << FormatDouble(m.feature_min[k]) << ' '
        << FormatDouble(m.feature_max[k]) << '\n';
  }
  for (const auto& w : m.warnings) out << "warning " << w << '\n';
  out << "num_support_vectors " << m.support_vectors.size() << '\n';
  for (std::size_t s = 0; s < m.support_vectors.size(); ++s) {
    out << "sv " << FormatDouble(m.coefficients[s]);
    for (double v : m.support_vectors[s]) out << ' ' << FormatDouble(v);
    out << '\n';
  }
  out << "end\n";
}

RegressionModel LoadModel(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || text::Trim(line) != kMagic) {
    throw ConfigError("not a vqfusion model file");
  }
  if (!std::getline(in, line)) throw ConfigError("model file truncated");
  auto tok = Tokens(line);
  if (tok.size() != 2 || tok[0] != "format_version") {
    throw ConfigError("model file lacks a format_version line");
  }
  if (tok[1] != std::to_string(RegressionModel::kFormatVersion)) {
    throw ConfigError("unsupported model format version " + tok[1]);
  }

  RegressionModel m;
  std::size_t num_features = 0;
  std::size_t num_sv = 0;
  bool ended = false;
  auto num = [](const std::string& s, std::string_view what) {
    return text::ParseDouble(s, what);
  };
  while (std::getline(in, line)) {
    tok = Tokens(line);
    if (tok.empty()) continue;
    const std::string& key = tok[0];
    auto need = [&](std::size_t n) {
      if (tok.size() != n) throw ConfigError("malformed model line: " + line);
    };
    if (key == "end") {
      ended = true;
      break;
    } else if (key == "layout") {
      need(2);
      m.layout = tok[1];
    } else if (key == "kernel") {
      need(2);
      if (tok[1] != "rbf") throw ConfigError("unsupported kernel " + tok[1]);
    } else if (key == "C") {
      need(2);
      m.params.cost = num(tok[1], key);
    } else if (key == "gamma") {
      need(2);
      m.params.gamma = num(tok[1], key);
    } else if (key == "epsilon") {
      need(2);
      m.params.epsilon = num(tok[1], key);
    } else if (key == "tolerance") {
      need(2);
      m.params.tolerance = num(tok[1], key);
    } else if (key == "max_iterations") {
      need(2);
      m.params.max_iterations = static_cast<long>(num(tok[1], key));
    } else if (key == "rho") {
      need(2);
      m.rho = num(tok[1], key);
    } else if (key == "score_min") {
      need(2);
      m.score_min = num(tok[1], key);
    } else if (key == "score_max") {
      need(2);
      m.score_max = num(tok[1], key);
    } else if (key == "iterations") {
      need(2);
      m.iterations = static_cast<long>(num(tok[1], key));
    } else if (key == "num_features") {
      need(2);
      num_features = static_cast<std::size_t>(num(tok[1], key));
    } else if (key == "feature") {
      need(4);
      m.feature_names.push_back(tok[1]);
      m.feature_min.push_back(num(tok[2], "feature min"));
      m.feature_max.push_back(num(tok[3], "feature max"));
    } else if (key == "warning") {
      m.warnings.push_back(std::string(text::Trim(line.substr(8))));
    } else if (key == "num_support_vectors") {
      need(2);
      num_sv = static_cast<std::size_t>(num(tok[1], key));
    } else if (key == "sv") {
      need(2 + m.feature_names.size());
      m.coefficients.push_back(num(tok[1], "coefficient"));
      std::vector<double> v;
      for (std::size_t k = 2; k < tok.size(); ++k) v.push_back(num(tok[k], "sv"));
      m.support_vectors.push_back(std::move(v));
    } else {
      throw ConfigError("unknown model key '" + key + "'");
    }
  }
  if (!ended) throw ConfigError("model file truncated (no 'end' line)");
  if (m.feature_names.size() != num_features || m.support_vectors.size() != num_sv) {
    throw ConfigError("model file counts do not match its contents");
  }
  return m;
}

void SaveModelFile(const std::string& path, const RegressionModel& model) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw DecodeError("cannot write model " + path);
  SaveModel(out, model);
  if (!out) throw DecodeError("write failed for model " + path);
}

RegressionModel LoadModelFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DecodeError("cannot open model " + path);
  return LoadModel(in);
}

}  // namespace vqf
