// Copyright 2026 The sketchrestore Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "sketchrestore/pipeline.h"

#include <chrono>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sketchrestore/error.h"
#include "sketchrestore/image_io.h"
#include "sketchrestore/metrics.h"
#include "sketchrestore/synth.h"

namespace sketchrestore {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

[[noreturn]] void BadConfig(const std::string& msg) {
  throw Error(ErrorCode::kBadConfig, "config: " + msg);
}

void CheckKeys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) BadConfig("'" + where + "' must be an object");
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : allowed) known = known || item.key() == k;
    if (!known) BadConfig("unknown key '" + item.key() + "' in " + where);
  }
}

template <typename T>
T Get(const json& obj, const char* key, const T& fallback) {
  if (!obj.contains(key)) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    BadConfig(std::string("'") + key + "' has the wrong type");
  }
}

std::filesystem::path Resolve(const std::filesystem::path& base, const std::filesystem::path& p) {
  return p.is_absolute() || base.empty() ? p : base / p;
}

double Millis(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

json PsnrJson(double v) { return std::isinf(v) ? json("inf") : json(v); }

// Removes files written so far unless released.
class WrittenFiles {
 public:
  ~WrittenFiles() {
    if (released_) return;
    for (const auto& p : paths_) {
      std::error_code ec;
      std::filesystem::remove(p, ec);
    }
  }

  void Add(const std::filesystem::path& p) { paths_.push_back(p); }
  std::vector<std::filesystem::path> Release() {
    released_ = true;
    return paths_;
  }

 private:
  std::vector<std::filesystem::path> paths_;
  bool released_ = false;
};

void CheckInvariant(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInternal, std::string("invariant violated: ") + what);
}

}  // namespace

void PipelineConfig::Validate() const {
  if (input.empty()) BadConfig("'input' is required");
  if (output_dir.empty()) BadConfig("'output_dir' is required");
  if (image_format != "png" && image_format != "ppm") BadConfig("'image_format' must be png or ppm");
  try {
    threshold.Validate();
    inpaint.Validate();
    gains.Validate(wavelet_levels);
    if (overlay) overlay->transform.Validate();
  } catch (const Error& e) {
    BadConfig(e.what());
  }
  if (wavelet_levels < 1) BadConfig("wavelet levels must be at least 1");
  if (landmarks && !(landmarks->tolerance > 0.0)) BadConfig("landmark tolerance must be positive");

  std::vector<std::filesystem::path> paths = {input, output_dir};
  if (overlay) paths.push_back(overlay->reference);
  if (landmarks) {
    paths.push_back(landmarks->restored);
    paths.push_back(landmarks->reference);
  }
  if (ground_truth) paths.push_back(*ground_truth);
  std::set<std::filesystem::path> seen;
  for (const auto& p : paths) {
    if (p.empty()) BadConfig("empty path");
    if (!seen.insert(p.lexically_normal()).second) {
      BadConfig("path '" + p.string() + "' is referenced more than once");
    }
  }
}

std::string PipelineConfigToJson(const PipelineConfig& c) {
  json doc{{"input", c.input.string()},
           {"output_dir", c.output_dir.string()},
           {"image_format", c.image_format},
           {"threshold", {{"value", c.threshold.threshold}, {"rule", ChannelRuleName(c.threshold.rule)}}},
           {"inpaint",
            {{"min_neighbors", c.inpaint.min_neighbors},
             {"max_iterations", c.inpaint.max_iterations},
             {"residual_policy", ResidualPolicyName(c.inpaint.residual_policy)}}},
           {"wavelet",
            {{"levels", c.wavelet_levels},
             {"gains", c.gains.gains},
             {"residual_gain", c.gains.residual_gain}}}};
  if (c.overlay) {
    const OverlayTransform& t = c.overlay->transform;
    doc["overlay"] = {{"reference", c.overlay->reference.string()},
                      {"tx", t.tx},
                      {"ty", t.ty},
                      {"scale", t.scale},
                      {"rotation", t.rotation_deg},
                      {"alpha", t.alpha}};
  }
  if (c.landmarks) {
    doc["landmarks"] = {{"restored", c.landmarks->restored.string()},
                        {"reference", c.landmarks->reference.string()},
                        {"tol", c.landmarks->tolerance}};
  }
  if (c.ground_truth) doc["ground_truth"] = c.ground_truth->string();
  return doc.dump(2);
}

PipelineConfig PipelineConfigFromJson(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    BadConfig(e.what());
  }
  CheckKeys(doc, "config",
            {"input", "output_dir", "image_format", "threshold", "inpaint", "wavelet", "overlay",
             "landmarks", "ground_truth"});
  PipelineConfig c;
  c.input = Get<std::string>(doc, "input", "");
  c.output_dir = Get<std::string>(doc, "output_dir", "");
  c.image_format = Get<std::string>(doc, "image_format", c.image_format);

  if (!doc.contains("threshold")) BadConfig("'threshold' is required");
  const json& th = doc.at("threshold");
  CheckKeys(th, "threshold", {"value", "rule"});
  if (!th.contains("value")) BadConfig("'threshold.value' is required");
  c.threshold.threshold = Get<int>(th, "value", 0);
  try {
    c.threshold.rule = ParseChannelRule(Get<std::string>(th, "rule", "luma"));
  } catch (const Error& e) {
    BadConfig(e.what());
  }

  if (doc.contains("inpaint")) {
    const json& ip = doc.at("inpaint");
    CheckKeys(ip, "inpaint", {"min_neighbors", "max_iterations", "residual_policy"});
    c.inpaint.min_neighbors = Get<int>(ip, "min_neighbors", c.inpaint.min_neighbors);
    c.inpaint.max_iterations = Get<int>(ip, "max_iterations", c.inpaint.max_iterations);
    try {
      c.inpaint.residual_policy =
          ParseResidualPolicy(Get<std::string>(ip, "residual_policy", "leave"));
    } catch (const Error& e) {
      BadConfig(e.what());
    }
  }

  if (doc.contains("wavelet")) {
    const json& wv = doc.at("wavelet");
    CheckKeys(wv, "wavelet", {"levels", "gains", "residual_gain"});
    c.wavelet_levels = Get<int>(wv, "levels", c.wavelet_levels);
    if (c.wavelet_levels < 1) BadConfig("wavelet levels must be at least 1");
    c.gains = GainVector::Unit(c.wavelet_levels);
    c.gains.gains = Get<std::vector<double>>(wv, "gains", c.gains.gains);
    c.gains.residual_gain = Get<double>(wv, "residual_gain", 1.0);
  }

  if (doc.contains("overlay")) {
    const json& ov = doc.at("overlay");
    CheckKeys(ov, "overlay", {"reference", "tx", "ty", "scale", "rotation", "alpha"});
    OverlayStage stage;
    stage.reference = Get<std::string>(ov, "reference", "");
    stage.transform.tx = Get<double>(ov, "tx", 0.0);
    stage.transform.ty = Get<double>(ov, "ty", 0.0);
    stage.transform.scale = Get<double>(ov, "scale", 1.0);
    stage.transform.rotation_deg = Get<double>(ov, "rotation", 0.0);
    stage.transform.alpha = Get<double>(ov, "alpha", 0.5);
    c.overlay = stage;
  }

  if (doc.contains("landmarks")) {
    const json& lm = doc.at("landmarks");
    CheckKeys(lm, "landmarks", {"restored", "reference", "tol"});
    if (!lm.contains("tol")) BadConfig("'landmarks.tol' is required");
    c.landmarks = LandmarkStage{Get<std::string>(lm, "restored", ""),
                                Get<std::string>(lm, "reference", ""), Get<double>(lm, "tol", 0.0)};
  }

  if (doc.contains("ground_truth")) c.ground_truth = Get<std::string>(doc, "ground_truth", "");
  c.Validate();
  return c;
}

std::string InpaintReportToJson(const InpaintReport& r) {
  json doc{{"iterations_run", r.iterations_run},
           {"filled_count", r.filled_count},
           {"remaining_masked", r.remaining_masked},
           {"residual_filled", r.residual_filled}};
  return doc.dump(2);
}

PipelineOutcome RunPipeline(const PipelineConfig& config, const std::filesystem::path& base_dir) {
  config.Validate();
  const auto start = Clock::now();
  json timings;

  // Read every input up front so a missing file leaves no partial outputs.
  auto t0 = Clock::now();
  const Raster original = LoadImage(Resolve(base_dir, config.input));
  std::optional<Raster> reference;
  if (config.overlay) reference = LoadImage(Resolve(base_dir, config.overlay->reference));
  std::optional<LandmarkSet> restored_marks;
  std::optional<LandmarkSet> reference_marks;
  if (config.landmarks) {
    restored_marks = LoadLandmarks(Resolve(base_dir, config.landmarks->restored));
    reference_marks = LoadLandmarks(Resolve(base_dir, config.landmarks->reference));
  }
  std::optional<Raster> truth;
  if (config.ground_truth) truth = LoadImage(Resolve(base_dir, *config.ground_truth));
  if (truth && !truth->SameShape(original)) {
    throw Error(ErrorCode::kBadConfig, "config: ground truth and input differ in size");
  }
  timings["load"] = Millis(t0);

  t0 = Clock::now();
  const Mask mask = BuildMask(original, config.threshold);
  const MaskStats stats = ComputeMaskStats(mask);
  const Raster whiteout = Whiteout(original, mask);
  timings["mask"] = Millis(t0);

  t0 = Clock::now();
  const InpaintResult inpainted = Inpaint(original, mask, config.inpaint);
  timings["inpaint"] = Millis(t0);
  const InpaintReport& rep = inpainted.report;
  CheckInvariant(rep.filled_count + rep.remaining_masked == stats.masked_count,
                 "filled + remaining == masked");
  for (size_t i = 0; i < original.size(); ++i) {
    CheckInvariant(mask[i] || inpainted.image[i] == original[i], "unmasked pixels conserved");
  }

  t0 = Clock::now();
  const Raster filtered = WaveletFilterRgb(inpainted.image, config.wavelet_levels, config.gains);
  timings["wavelet"] = Millis(t0);

  json report;
  report["config"] = json::parse(PipelineConfigToJson(config));
  report["mask"] = {{"masked_count", stats.masked_count}, {"fraction", stats.fraction}};
  report["inpaint"] = json::parse(InpaintReportToJson(rep));
  report["edge_energy"] = {{"inpainted", MeanAbsLaplacian(inpainted.image)},
                           {"filtered", MeanAbsLaplacian(filtered)}};

  std::optional<Raster> overlaid;
  if (config.overlay) {
    t0 = Clock::now();
    const OverlayTransform& t = config.overlay->transform;
    const Raster placed = Warp(filtered, t, reference->width(), reference->height());
    overlaid = Blend(*reference, placed, t.alpha);
    const Mask everywhere(reference->width(), reference->height(), true);
    report["overlay"] = {{"coincidence_score", CoincidenceScore(*reference, placed, everywhere)}};
    timings["overlay"] = Millis(t0);
  }
  if (config.landmarks) {
    const PortraitComparison cmp =
        ComparePortraits(*restored_marks, *reference_marks, config.landmarks->tolerance);
    report["comparison"] = json::parse(ComparisonToJson(cmp));
  }
  if (truth) {
    const SynthEvaluation restored_eval{Psnr(*truth, inpainted.image), Psnr(*truth, original),
                                        MeanAbsErrorOnMask(*truth, inpainted.image, mask)};
    report["evaluation"] = json::parse(EvaluationToJson(restored_eval));
    report["evaluation"]["psnr_filtered_db"] = PsnrJson(Psnr(*truth, filtered));
    if (!std::isinf(restored_eval.psnr_db) && !std::isinf(restored_eval.psnr_degraded_db)) {
      report["evaluation"]["psnr_improvement_db"] =
          restored_eval.psnr_db - restored_eval.psnr_degraded_db;
    }
  }

  t0 = Clock::now();
  std::error_code ec;
  const std::filesystem::path out_dir = Resolve(base_dir, config.output_dir);
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create " + out_dir.string() + ": " + ec.message());
  const std::string ext = config.image_format == "ppm" ? ".ppm" : ".png";
  WrittenFiles written;
  const Raster* stages[] = {&original, &whiteout, &inpainted.image, &filtered};
  for (int i = 0; i < 4; ++i) {
    const auto path = out_dir / (std::string(kStageNames[i]) + ext);
    written.Add(path);
    SaveImage(*stages[i], path);
  }
  if (overlaid) {
    const auto path = out_dir / ("05_overlay" + ext);
    written.Add(path);
    SaveImage(*overlaid, path);
  }
  timings["write_images"] = Millis(t0);
  timings["total"] = Millis(start);
  report["timings_ms"] = timings;

  const auto report_path = out_dir / "report.json";
  written.Add(report_path);
  PipelineOutcome outcome;
  outcome.report_json = report.dump(2);
  {
    std::ofstream out(report_path);
    out << outcome.report_json << "\n";
    out.flush();
    if (!out) throw Error(ErrorCode::kIoError, "cannot write " + report_path.string());
  }
  outcome.written = written.Release();
  return outcome;
}

PipelineOutcome RunPipelineFile(const std::filesystem::path& config_path) {
  std::ifstream in(config_path);
  if (!in) throw Error(ErrorCode::kNotFound, "cannot open config " + config_path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  const PipelineConfig config = PipelineConfigFromJson(ss.str());
  return RunPipeline(config, config_path.parent_path());
}

}  // namespace sketchrestore
