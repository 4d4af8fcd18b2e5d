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

#include "vqf/cli.h"

#include <omp.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>

#include <CLI11.hpp>

#include "text_util.h"
#include "vqf/errors.h"
#include "vqf/evaluation.h"
#include "vqf/feature_cache.h"
#include "vqf/fusion.h"
#include "vqf/manifest.h"
#include "vqf/pooling.h"

namespace vqf::cli {
namespace {

namespace fs = std::filesystem;
using text::FormatDouble;

struct Options {
  std::string config;
  std::string ref;
  std::string dist;
  std::string manifest;
  std::string output;
  std::string report;
  std::string cache_dir;
  std::string pix_fmt = "yuv420p8b";
  int width = 0;
  int height = 0;
  double fps = 0.0;
  std::string layout;
  std::vector<std::string> models;
  int threads = 0;
  std::string pooling = "mean";
  double tau_mem = 2.0;
  double alpha = 0.8;
  bool no_clip = false;
  std::optional<double> cost;
  std::optional<double> gamma;
  std::optional<double> epsilon;
  int block_size = 5;
  double noise_variance = 0.1;
};

// ---- config file -----------------------------------------------------------

// "key = value" lines; '#' starts a comment. Keys are long flag names.
std::vector<std::pair<std::string, std::string>> ReadConfigFile(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw DecodeError("cannot open config file " + path.string());
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto trimmed = text::Trim(line);
    if (trimmed.empty()) continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                        ": expected 'key = value'");
    }
    std::string key(text::Trim(trimmed.substr(0, eq)));
    std::string value(text::Trim(trimmed.substr(eq + 1)));
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    if (key == "C") key = "cost";
    entries.emplace_back(std::move(key), std::move(value));
  }
  return entries;
}

std::string FlagKey(std::string_view token) {
  if (token == "-C") return "cost";
  if (token.rfind("--", 0) != 0) return {};
  token.remove_prefix(2);
  return std::string(token.substr(0, token.find('=')));
}

// Appends config-file settings for every flag the command line leaves unset.
std::vector<std::string> MergeConfig(std::vector<std::string> args) {
  std::optional<std::string> config_path;
  std::set<std::string> given;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const auto key = FlagKey(args[i]);
    if (key.empty()) continue;
    given.insert(key);
    if (key == "config") {
      const auto eq = args[i].find('=');
      if (eq != std::string::npos) {
        config_path = args[i].substr(eq + 1);
      } else if (i + 1 < args.size()) {
        config_path = args[i + 1];
      }
    }
  }
  if (!config_path) return args;
  for (const auto& [key, value] : ReadConfigFile(*config_path)) {
    if (given.count(key) || key == "config") continue;
    if (key == "no-clip") {
      if (value == "true" || value == "1") args.push_back("--no-clip");
      continue;
    }
    args.push_back("--" + key + "=" + value);
  }
  return args;
}

// ---- option plumbing -------------------------------------------------------

void AddCommon(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config, "key = value file; flags win over it");
  cmd->add_option("--threads", o.threads, "worker threads (0 = OpenMP default)")
      ->check(CLI::NonNegativeNumber);
}

void AddPair(CLI::App* cmd, Options& o) {
  cmd->add_option("--ref", o.ref, "reference video (.yuv or .y4m)");
  cmd->add_option("--dist", o.dist, "distorted video (.yuv or .y4m)");
  cmd->add_option("--pix-fmt", o.pix_fmt, "yuv420p8b or yuv420p10b (headerless input)");
  cmd->add_option("--width", o.width, "frame width (headerless input)");
  cmd->add_option("--height", o.height, "frame height (headerless input)");
  cmd->add_option("--fps", o.fps, "frame rate (headerless input)");
}

void AddExtraction(CLI::App* cmd, Options& o) {
  cmd->add_option("--cache-dir", o.cache_dir, "feature cache directory");
  cmd->add_option("--block-size", o.block_size, "GSM block size b");
  cmd->add_option("--noise-variance", o.noise_variance, "GSM neural noise variance");
}

void AddScoring(CLI::App* cmd, Options& o) {
  cmd->add_option("--model", o.models, "model file; give twice (m1, m2) for evmaf");
  cmd->add_option("--pooling", o.pooling, "mean or hysteresis");
  cmd->add_option("--tau-mem", o.tau_mem, "hysteresis memory in seconds");
  cmd->add_option("--alpha", o.alpha, "hysteresis memory weight");
  cmd->add_flag("--no-clip", o.no_clip, "do not clip predictions to the training range");
}

ExtractorConfig MakeExtractor(const Options& o, std::uint32_t groups) {
  ExtractorConfig c;
  c.groups = groups;
  c.gsm.block_size = o.block_size;
  c.gsm.noise_variance = o.noise_variance;
  if (o.block_size < 1) throw ConfigError("--block-size must be positive");
  if (!(o.noise_variance > 0.0)) throw ConfigError("--noise-variance must be positive");
  return c;
}

VideoSource MakeSource(const std::string& path, const Options& o) {
  VideoSource s;
  s.path = path;
  if (!s.self_describing()) {
    if (o.width <= 0 || o.height <= 0 || !(o.fps > 0.0)) {
      throw ConfigError("headerless input " + path +
                        " needs --width, --height and --fps");
    }
    s.format = ParsePixelFormat(o.pix_fmt);
  } else if (!o.pix_fmt.empty()) {
    s.format = ParsePixelFormat(o.pix_fmt);
  }
  s.width = o.width;
  s.height = o.height;
  s.frame_rate = o.fps;
  return s;
}

void RequirePair(const Options& o) {
  if (o.ref.empty() || o.dist.empty()) throw ConfigError("--ref and --dist are required");
}

std::optional<FeatureCache> MakeCache(const Options& o, std::ostream& err) {
  if (o.cache_dir.empty()) return std::nullopt;
  return FeatureCache(o.cache_dir, &err);
}

std::ofstream OpenOutput(const fs::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DecodeError("cannot write " + path.string());
  return out;
}

void CloseOutput(std::ofstream& out, const fs::path& path) {
  out.close();
  if (!out) throw DecodeError("write failed for " + path.string());
}

// Provenance lines written ahead of CSV outputs and reports.
void WriteSettings(std::ostream& out, const Options& o, std::string_view layout) {
  out << "# vqfusion " << kExtractorVersion << " layout=" << layout
      << " block_size=" << o.block_size
      << " noise_variance=" << FormatDouble(o.noise_variance)
      << " pooling=" << o.pooling << " tau_mem=" << FormatDouble(o.tau_mem)
      << " alpha=" << FormatDouble(o.alpha) << " clip=" << (o.no_clip ? 0 : 1)
      << '\n';
}

// ---- scoring ---------------------------------------------------------------

// One model, or an M1/M2 pair averaged per frame.
class Scorer {
 public:
  Scorer(const Options& o) {
    if (o.models.empty()) throw ConfigError("--model is required");
    if (o.models.size() > 2) throw ConfigError("at most two --model files");
    for (const auto& path : o.models) models_.push_back(LoadModelFile(path));
    std::vector<Layout> layouts;
    for (const auto& m : models_) layouts.push_back(ParseLayout(m.layout));

    const bool want_ensemble = o.layout == "evmaf" || models_.size() == 2;
    if (want_ensemble) {
      if (models_.size() != 2) throw ConfigError("evmaf needs two --model files (m1, m2)");
      if (layouts[0] == Layout::kM2 && layouts[1] == Layout::kM1) {
        std::swap(models_[0], models_[1]);
        std::swap(layouts[0], layouts[1]);
      }
      if (layouts[0] != Layout::kM1 || layouts[1] != Layout::kM2) {
        throw ConfigError("evmaf needs one m1 and one m2 model, got " +
                          models_[0].layout + " and " + models_[1].layout);
      }
      if (!o.layout.empty() && o.layout != "evmaf") {
        throw ConfigError("layout " + o.layout + " does not take two models");
      }
      name_ = "evmaf";
    } else {
      if (!o.layout.empty() && o.layout != models_[0].layout) {
        throw ConfigError("layout " + o.layout + " does not match model layout " +
                          models_[0].layout);
      }
      name_ = models_[0].layout;
    }
    layouts_ = layouts;
    clip_ = !o.no_clip;
  }

  const std::string& name() const { return name_; }
  bool ensemble() const { return models_.size() == 2; }

  std::uint32_t groups() const {
    std::uint32_t g = 0;
    for (Layout l : layouts_) g |= LayoutGroups(l);
    return g;
  }

  // Per-frame scores; `parts` receives each model's own scores.
  std::vector<double> Score(const FeatureTable& table,
                            std::vector<std::vector<double>>* parts = nullptr) const {
    std::vector<std::vector<FeatureVector>> vecs;
    for (Layout l : layouts_) vecs.push_back(AssembleFeatures(l, table));
    std::vector<double> scores(table.num_frames());
    if (parts) parts->assign(models_.size(), std::vector<double>(table.num_frames()));
    for (std::size_t f = 0; f < table.num_frames(); ++f) {
      if (ensemble()) {
        scores[f] = EnsemblePredict(models_[0], models_[1], vecs[0][f], vecs[1][f], clip_);
      } else {
        scores[f] = PredictFrame(models_[0], vecs[0][f], clip_);
      }
      if (parts) {
        for (std::size_t m = 0; m < models_.size(); ++m) {
          (*parts)[m][f] = PredictFrame(models_[m], vecs[m][f], clip_);
        }
      }
    }
    return scores;
  }

 private:
  std::vector<RegressionModel> models_;
  std::vector<Layout> layouts_;
  std::string name_;
  bool clip_ = true;
};

double PoolScores(const std::vector<double>& scores, double frame_rate,
                  const Options& o) {
  const auto method = ParsePoolingMethod(o.pooling);
  HysteresisParams hp{o.tau_mem, o.alpha};
  return Pool(ScoreSeries{scores, frame_rate}, method, hp);
}

// Pooled prediction for each manifest record, in manifest order.
std::vector<double> PredictRecords(const Manifest& manifest, const Scorer& scorer,
                                   const Options& o, std::ostream& err) {
  auto cache = MakeCache(o, err);
  const auto extractor = MakeExtractor(o, scorer.groups());
  std::vector<double> pooled;
  for (const auto& rec : manifest.records) {
    const auto res = ExtractPair(rec.ref, rec.dist, extractor, cache ? &*cache : nullptr);
    pooled.push_back(PoolScores(scorer.Score(res.features.table),
                                res.features.frame_rate, o));
  }
  return pooled;
}

// ---- subcommands -----------------------------------------------------------

std::uint32_t GroupsForLayoutFlag(const std::string& layout) {
  if (layout == "evmaf") return LayoutGroups(Layout::kM1) | LayoutGroups(Layout::kM2);
  return LayoutGroups(ParseLayout(layout));
}

std::string LayoutFlagOr(const Options& o, const char* fallback) {
  return o.layout.empty() ? fallback : o.layout;
}

int CmdExtract(const Options& o, std::ostream& out, std::ostream& err) {
  const auto layout = LayoutFlagOr(o, "stvmaf");
  const auto extractor = MakeExtractor(o, GroupsForLayoutFlag(layout));
  auto cache = MakeCache(o, err);

  auto write = [&](const FeatureTable& table, const fs::path& path) {
    if (path.empty()) {
      WriteFeatureCsv(out, table);
      return;
    }
    auto f = OpenOutput(path);
    WriteFeatureCsv(f, table);
    CloseOutput(f, path);
    out << "wrote " << path.string() << " (" << table.num_frames() << " frames, "
        << table.names().size() << " features)\n";
  };

  if (!o.manifest.empty()) {
    if (o.output.empty()) throw ConfigError("--output directory is required with --manifest");
    const auto manifest = LoadManifestFile(o.manifest);
    for (const auto& rec : manifest.records) {
      const auto res = ExtractPair(rec.ref, rec.dist, extractor, cache ? &*cache : nullptr);
      const auto name = "row" + std::to_string(rec.row) + "_" + rec.content_id + "_" +
                        rec.dist.path.stem().string() + ".csv";
      write(res.features.table, fs::path(o.output) / name);
    }
    return kExitOk;
  }
  RequirePair(o);
  const auto res = ExtractPair(MakeSource(o.ref, o), MakeSource(o.dist, o), extractor,
                               cache ? &*cache : nullptr);
  write(res.features.table, o.output);
  return kExitOk;
}

void PrintTrainingDiagnostics(std::ostream& out, const RegressionModel& m,
                              const fs::path& path) {
  out << "model " << m.layout << " -> " << path.string() << '\n';
  out << "  params: C=" << FormatDouble(m.params.cost)
      << " gamma=" << FormatDouble(m.params.gamma)
      << " epsilon=" << FormatDouble(m.params.epsilon) << '\n';
  out << "  solver iterations: " << m.iterations
      << ", support vectors: " << m.support_vectors.size() << '\n';
  out << "  score range: [" << FormatDouble(m.score_min) << ", "
      << FormatDouble(m.score_max) << "]\n";
  for (std::size_t k = 0; k < m.num_features(); ++k) {
    out << "  " << m.feature_names[k] << ": [" << FormatDouble(m.feature_min[k])
        << ", " << FormatDouble(m.feature_max[k]) << "]\n";
  }
  for (const auto& w : m.warnings) out << "  warning: " << w << '\n';
}

int CmdTrain(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.manifest.empty()) throw ConfigError("--manifest is required");
  if (o.output.empty()) throw ConfigError("--output model path is required");
  const auto layout_flag = LayoutFlagOr(o, "stvmaf");
  std::vector<Layout> layouts;
  if (layout_flag == "evmaf") {
    layouts = {Layout::kM1, Layout::kM2};
  } else {
    layouts = {ParseLayout(layout_flag)};
  }
  const auto manifest = LoadManifestFile(o.manifest, {.require_mos = true});
  if (manifest.records.size() < 2) {
    throw ConfigError("training needs at least 2 videos, manifest has " +
                      std::to_string(manifest.records.size()));
  }
  const auto extractor = MakeExtractor(o, GroupsForLayoutFlag(layout_flag));
  auto cache = MakeCache(o, err);

  std::vector<FeatureTable> tables;
  std::vector<double> mos;
  for (const auto& rec : manifest.records) {
    tables.push_back(
        ExtractPair(rec.ref, rec.dist, extractor, cache ? &*cache : nullptr)
            .features.table);
    mos.push_back(*rec.mos);
  }
  out << "training on " << tables.size() << " videos, layout " << layout_flag << '\n';

  for (Layout layout : layouts) {
    std::vector<FeatureVector> videos;
    for (const auto& t : tables) {
      videos.push_back(AggregateForTraining(AssembleFeatures(layout, t)));
    }
    auto params = DefaultSvrParams(layout);
    if (o.cost) params.cost = *o.cost;
    if (o.gamma) params.gamma = *o.gamma;
    if (o.epsilon) params.epsilon = *o.epsilon;
    const auto model = TrainModel(layout, videos, mos, params);

    fs::path path = o.output;
    if (layouts.size() > 1) {
      path = path.parent_path() / (path.stem().string() + "_" +
                                   std::string(LayoutId(layout)) +
                                   path.extension().string());
    }
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    SaveModelFile(path.string(), model);
    PrintTrainingDiagnostics(out, model, path);
  }
  return kExitOk;
}

int CmdPredict(const Options& o, std::ostream& out, std::ostream& err) {
  RequirePair(o);
  const Scorer scorer(o);
  auto cache = MakeCache(o, err);
  const auto res = ExtractPair(MakeSource(o.ref, o), MakeSource(o.dist, o),
                               MakeExtractor(o, scorer.groups()),
                               cache ? &*cache : nullptr);
  std::vector<std::vector<double>> parts;
  const auto scores = scorer.Score(res.features.table, &parts);
  const double pooled = PoolScores(scores, res.features.frame_rate, o);

  if (!o.output.empty()) {
    auto f = OpenOutput(o.output);
    WriteSettings(f, o, scorer.name());
    f << "frame,score";
    if (scorer.ensemble()) f << ",m1,m2";
    f << '\n';
    for (std::size_t i = 0; i < scores.size(); ++i) {
      f << i << ',' << FormatDouble(scores[i]);
      if (scorer.ensemble()) {
        f << ',' << FormatDouble(parts[0][i]) << ',' << FormatDouble(parts[1][i]);
      }
      f << '\n';
    }
    CloseOutput(f, o.output);
  }
  out << "frames = " << scores.size() << '\n';
  out << "pooling = " << o.pooling << '\n';
  out << "score = " << FormatDouble(pooled) << '\n';
  return kExitOk;
}

int CmdEvaluate(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.manifest.empty()) throw ConfigError("--manifest is required");
  const Scorer scorer(o);
  const auto manifest = LoadManifestFile(o.manifest, {.require_mos = true});
  const auto pooled = PredictRecords(manifest, scorer, o, err);

  std::vector<DatasetScores> datasets;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < manifest.records.size(); ++i) {
    const auto& rec = manifest.records[i];
    auto [it, fresh] = index.emplace(rec.dataset, datasets.size());
    if (fresh) datasets.push_back({rec.dataset, {}, {}});
    datasets[it->second].pred.push_back(pooled[i]);
    datasets[it->second].mos.push_back(*rec.mos);
  }
  const auto report = Evaluate(datasets);
  WriteReportTable(out, report);
  for (const auto& d : report.datasets) {
    if (!d.error.empty()) err << "warning: dataset " << d.name << ": " << d.error << '\n';
  }
  if (!o.report.empty()) {
    auto f = OpenOutput(o.report);
    WriteSettings(f, o, scorer.name());
    WriteReportKeyValues(f, report);
    CloseOutput(f, o.report);
  }
  if (!o.output.empty()) {
    auto f = OpenOutput(o.output);
    WriteSettings(f, o, scorer.name());
    f << "row,content_id,dataset,prediction,mos\n";
    for (std::size_t i = 0; i < manifest.records.size(); ++i) {
      const auto& rec = manifest.records[i];
      f << rec.row << ',' << rec.content_id << ',' << rec.dataset << ','
        << FormatDouble(pooled[i]) << ',' << FormatDouble(*rec.mos) << '\n';
    }
    CloseOutput(f, o.output);
  }
  if (!report.aggregate_valid) {
    throw EvaluationError("no dataset produced valid correlations");
  }
  return kExitOk;
}

int CmdMonotonicity(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.manifest.empty()) throw ConfigError("--manifest is required");
  const Scorer scorer(o);
  const auto manifest = LoadManifestFile(o.manifest, {.require_grid = true});
  if (manifest.records.empty()) throw AuditError("grid manifest has no rows");
  const auto pooled = PredictRecords(manifest, scorer, o, err);
  std::vector<GridCell> cells;
  for (std::size_t i = 0; i < manifest.records.size(); ++i) {
    cells.push_back({*manifest.records[i].resolution, *manifest.records[i].crf, pooled[i]});
  }
  const auto grid = ScoreGrid::FromCells(cells);
  const auto audit = MonotonicityAudit(grid);
  if (!o.output.empty()) {
    auto f = OpenOutput(o.output);
    WriteGridCsv(f, grid);
    CloseOutput(f, o.output);
  }
  if (!o.report.empty()) {
    auto f = OpenOutput(o.report);
    WriteSettings(f, o, scorer.name());
    WriteAuditReport(f, grid, audit);
    CloseOutput(f, o.report);
  }
  WriteAuditReport(out, grid, audit);
  out << "monotone = " << (audit.monotone() ? "yes" : "no") << '\n';
  return kExitOk;
}

}  // namespace

int ExitCodeFor(const std::exception& e) {
  if (dynamic_cast<const DecodeError*>(&e)) return kExitIo;
  if (dynamic_cast<const NumericalError*>(&e)) return kExitNumerical;
  if (dynamic_cast<const EvaluationError*>(&e)) return kExitNumerical;
  if (dynamic_cast<const Error*>(&e)) return kExitUsage;
  if (dynamic_cast<const fs::filesystem_error*>(&e)) return kExitIo;
  if (dynamic_cast<const std::ios_base::failure*>(&e)) return kExitIo;
  return kExitNumerical;
}

int Run(const std::vector<std::string>& raw_args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Full-reference video quality prediction", "vqfusion"};
  app.require_subcommand(1);

  auto* extract = app.add_subcommand("extract", "per-frame features for a pair or a manifest");
  AddCommon(extract, o);
  AddPair(extract, o);
  AddExtraction(extract, o);
  extract->add_option("--manifest", o.manifest, "manifest CSV (output is a directory)");
  extract->add_option("--layout", o.layout, "stvmaf, m1, m2 or evmaf");
  extract->add_option("--output", o.output, "feature CSV (stdout if omitted)");

  auto* train = app.add_subcommand("train", "fit regression model(s) on a manifest");
  AddCommon(train, o);
  AddExtraction(train, o);
  train->add_option("--manifest", o.manifest, "manifest CSV with mos");
  train->add_option("--layout", o.layout, "stvmaf, m1, m2 or evmaf");
  train->add_option("--output", o.output, "model path; evmaf writes <stem>_m1/_m2");
  train->add_option("-C,--cost", o.cost, "SVR regularization C");
  train->add_option("--gamma", o.gamma, "RBF kernel width");
  train->add_option("--epsilon", o.epsilon, "SVR tube half-width");

  auto* predict = app.add_subcommand("predict", "per-frame and pooled scores for one pair");
  AddCommon(predict, o);
  AddPair(predict, o);
  AddExtraction(predict, o);
  AddScoring(predict, o);
  predict->add_option("--layout", o.layout, "expected layout (stvmaf, m1, m2, evmaf)");
  predict->add_option("--output", o.output, "per-frame score CSV");

  auto* evaluate = app.add_subcommand("evaluate", "correlation report over a manifest");
  AddCommon(evaluate, o);
  AddExtraction(evaluate, o);
  AddScoring(evaluate, o);
  evaluate->add_option("--manifest", o.manifest, "manifest CSV with mos (and dataset)");
  evaluate->add_option("--layout", o.layout, "expected layout");
  evaluate->add_option("--report", o.report, "key-value report file");
  evaluate->add_option("--output", o.output, "per-video prediction CSV");

  auto* mono = app.add_subcommand("monotonicity", "audit a resolution x CRF grid");
  AddCommon(mono, o);
  AddExtraction(mono, o);
  AddScoring(mono, o);
  mono->add_option("--manifest", o.manifest, "manifest CSV with resolution and crf");
  mono->add_option("--layout", o.layout, "expected layout");
  mono->add_option("--report", o.report, "audit report file");
  mono->add_option("--output", o.output, "grid CSV");

  try {
    auto args = MergeConfig(raw_args);
    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? kExitOk : kExitUsage;
    }
    if (o.threads > 0) omp_set_num_threads(o.threads);
    if (*extract) return CmdExtract(o, out, err);
    if (*train) return CmdTrain(o, out, err);
    if (*predict) return CmdPredict(o, out, err);
    if (*evaluate) return CmdEvaluate(o, out, err);
    return CmdMonotonicity(o, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return ExitCodeFor(e);
  }
}

}  // namespace vqf::cli
