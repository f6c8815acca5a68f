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


#ifndef SKETCHRESTORE_PIPELINE_H_
#define SKETCHRESTORE_PIPELINE_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sketchrestore/compose.h"
#include "sketchrestore/inpaint.h"
#include "sketchrestore/masking.h"
#include "sketchrestore/wavelet.h"

namespace sketchrestore {

struct OverlayStage {
  std::filesystem::path reference;
  OverlayTransform transform;

  friend bool operator==(const OverlayStage&, const OverlayStage&) = default;
};

struct LandmarkStage {
  std::filesystem::path restored;
  std::filesystem::path reference;
  double tolerance = 0.0;

  friend bool operator==(const LandmarkStage&, const LandmarkStage&) = default;
};

// One declarative restoration run. Relative paths are resolved against the
// directory of the config file when loaded through RunPipelineFile.
struct PipelineConfig {
  std::filesystem::path input;
  std::filesystem::path output_dir;
  // "png" or "ppm".
  std::string image_format = "png";
  ThresholdSpec threshold;
  InpaintConfig inpaint;
  int wavelet_levels = kDefaultWaveletLevels;
  GainVector gains = GainVector::Unit(kDefaultWaveletLevels);
  std::optional<OverlayStage> overlay;
  std::optional<LandmarkStage> landmarks;
  std::optional<std::filesystem::path> ground_truth;

  // Throws kBadConfig.
  void Validate() const;

  friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

std::string PipelineConfigToJson(const PipelineConfig& config);
PipelineConfig PipelineConfigFromJson(const std::string& text);

std::string InpaintReportToJson(const InpaintReport& report);

// Stage file names in write order.
inline constexpr const char* kStageNames[] = {"01_original", "02_whiteout", "03_inpainted",
                                              "04_filtered"};

struct PipelineOutcome {
  std::vector<std::filesystem::path> written;
  std::string report_json;
};

// Runs original -> whiteout -> inpainted -> filtered, plus the optional
// overlay, landmark comparison and ground-truth evaluation. All inputs are
// read before anything is written; if a write fails, files already written
// by this run are removed.
PipelineOutcome RunPipeline(const PipelineConfig& config,
                            const std::filesystem::path& base_dir = {});
PipelineOutcome RunPipelineFile(const std::filesystem::path& config_path);

}  // namespace sketchrestore

#endif  // SKETCHRESTORE_PIPELINE_H_
