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


#include <doctest.h>

#include <fstream>

#include "sketchrestore/error.h"
#include "sketchrestore/image_io.h"
#include "sketchrestore/pipeline.h"
#include "sketchrestore/synth.h"
#include "test_util.h"

#include <json.hpp>

namespace sketchrestore {
namespace {

using nlohmann::json;

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kInternal;
}

PipelineConfig FullConfig() {
  PipelineConfig c;
  c.input = "in.png";
  c.output_dir = "out";
  c.image_format = "ppm";
  c.threshold = {73, ChannelRule::kMinChannel};
  c.inpaint.min_neighbors = 2;
  c.inpaint.max_iterations = 77;
  c.inpaint.residual_policy = ResidualPolicy::kFillNearest;
  c.wavelet_levels = 3;
  c.gains = GainVector{{1.25, 0.1 + 0.2, 1.0}, 0.75};
  c.overlay = OverlayStage{"ref.png", OverlayTransform{1.5, -2.25, 1.1, 12.5, 0.4}};
  c.landmarks = LandmarkStage{"a.json", "b.json", 0.05};
  c.ground_truth = "truth.png";
  return c;
}

TEST_CASE("config round trips through json losslessly") {
  const PipelineConfig c = FullConfig();
  CHECK(PipelineConfigFromJson(PipelineConfigToJson(c)) == c);

  PipelineConfig minimal;
  minimal.input = "x.png";
  minimal.output_dir = "o";
  minimal.threshold.threshold = 10;
  CHECK(PipelineConfigFromJson(PipelineConfigToJson(minimal)) == minimal);
}

TEST_CASE("config validation") {
  auto bad = [](const std::string& text) {
    return CodeOf([&] { PipelineConfigFromJson(text); }) == ErrorCode::kBadConfig;
  };
  CHECK(bad(R"({"input":"a.png","output_dir":"o"})"));
  CHECK(bad(R"({"input":"a.png","output_dir":"o","threshold":{"value":300}})"));
  CHECK(bad(R"({"input":"a.png","output_dir":"o","threshold":{"value":3,"rule":"hue"}})"));
  CHECK(bad(R"({"input":"a.png","output_dir":"o","threshold":{"value":3},"typo":1})"));
  CHECK(bad(R"({"input":"a.png","output_dir":"a.png","threshold":{"value":3}})"));
  CHECK(bad(R"({"input":"a.png","output_dir":"o","threshold":{"value":3},"ground_truth":"./a.png"})"));
  CHECK(bad(R"({"input":"a.png","output_dir":"o","threshold":{"value":3},"wavelet":{"levels":2,"gains":[1]}})"));
  CHECK(bad(R"({"input":"a.png","output_dir":"o","threshold":{"value":3},"wavelet":{"levels":0}})"));
  CHECK(bad(R"({"input":"a.png","output_dir":"o","threshold":{"value":3},"inpaint":{"min_neighbors":0}})"));
  CHECK(bad(R"({"input":"a.png","output_dir":"o","threshold":{"value":"3"}})"));
  CHECK(bad(R"({"input":"a.png","output_dir":"o","threshold":{"value":3},"landmarks":{"restored":"x","reference":"y"}})"));
  CHECK(bad("{nope"));
}

struct Fixture {
  testing::TempDir dir{"pipeline"};
  SynthCase c = Generate(SynthSpec{});

  Fixture() {
    SaveImage(c.degraded, dir / "degraded.png");
    SaveImage(c.truth, dir / "truth.png");
  }

  PipelineConfig Config(const std::string& out) const {
    PipelineConfig cfg;
    cfg.input = "degraded.png";
    cfg.output_dir = out;
    cfg.threshold.threshold = KnownGoodThreshold(c.spec);
    cfg.ground_truth = "truth.png";
    return cfg;
  }
};

TEST_CASE("pipeline writes the four stages and a report") {
  Fixture f;
  const PipelineOutcome out = RunPipeline(f.Config("out"), f.dir.path());
  CHECK(out.written.size() == 5);
  const auto o = f.dir / "out";
  const Raster s1 = LoadImage(o / "01_original.png");
  const Raster s2 = LoadImage(o / "02_whiteout.png");
  const Raster s3 = LoadImage(o / "03_inpainted.png");
  const Raster s4 = LoadImage(o / "04_filtered.png");
  CHECK(s1 == f.c.degraded);
  for (size_t i = 0; i < s1.size(); ++i) {
    CHECK((s2[i] == s1[i]) == !f.c.text_mask[i]);
  }
  CHECK(s4 == s3);

  std::ifstream in(o / "report.json");
  const json report = json::parse(in);
  CHECK(report["mask"]["masked_count"].get<size_t>() == f.c.text_mask.Count());
  CHECK(report["inpaint"]["remaining_masked"].get<size_t>() < f.c.text_mask.Count());
  CHECK(report["evaluation"]["psnr_improvement_db"].get<double>() > 0.0);
  CHECK(report.contains("timings_ms"));
}

TEST_CASE("threshold zero passes the image through") {
  Fixture f;
  PipelineConfig cfg = f.Config("zero");
  cfg.threshold.threshold = 0;
  const PipelineOutcome out = RunPipeline(cfg, f.dir.path());
  const auto o = f.dir / "zero";
  CHECK(LoadImage(o / "02_whiteout.png") == f.c.degraded);
  CHECK(LoadImage(o / "03_inpainted.png") == f.c.degraded);
  const json report = json::parse(out.report_json);
  CHECK(report["mask"]["masked_count"].get<size_t>() == 0);
}

TEST_CASE("missing input leaves no outputs behind") {
  Fixture f;
  PipelineConfig cfg = f.Config("missing");
  cfg.input = "nope.png";
  CHECK(CodeOf([&] { RunPipeline(cfg, f.dir.path()); }) == ErrorCode::kNotFound);
  CHECK_FALSE(std::filesystem::exists(f.dir / "missing"));
}

TEST_CASE("ppm output format, overlay and landmarks") {
  Fixture f;
  SaveImage(f.c.truth, f.dir / "reference.png");
  const std::string marks = R"({"left_eye":[40,50],"right_eye":[80,50],"nose_tip":[60,75],"mouth_center":[60,95]})";
  std::ofstream(f.dir / "a.json") << marks;
  std::ofstream(f.dir / "b.json") << marks;
  PipelineConfig cfg = f.Config("full");
  cfg.image_format = "ppm";
  cfg.overlay = OverlayStage{"reference.png", OverlayTransform{0, 0, 1, 0, 0.5}};
  cfg.landmarks = LandmarkStage{"a.json", "b.json", 0.01};
  const PipelineOutcome out = RunPipeline(cfg, f.dir.path());
  CHECK(std::filesystem::exists(f.dir / "full/04_filtered.ppm"));
  CHECK(std::filesystem::exists(f.dir / "full/05_overlay.ppm"));
  const json report = json::parse(out.report_json);
  CHECK(report["comparison"]["coincident"][0].get<bool>());
  CHECK(report["overlay"]["coincidence_score"].get<double>() < 5.0);
}

TEST_CASE("pipeline file entry point resolves paths against the config directory") {
  Fixture f;
  std::ofstream(f.dir / "cfg.json") << PipelineConfigToJson(f.Config("via_file"));
  RunPipelineFile(f.dir / "cfg.json");
  CHECK(std::filesystem::exists(f.dir / "via_file/03_inpainted.png"));
  CHECK(CodeOf([&] { RunPipelineFile(f.dir / "absent.json"); }) == ErrorCode::kNotFound);
}

}  // namespace
}  // namespace sketchrestore
