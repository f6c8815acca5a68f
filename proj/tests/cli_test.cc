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


// Drives the command-line tool as a subprocess.
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "sketchrestore/image_io.h"
#include "sketchrestore/inpaint.h"
#include "sketchrestore/synth.h"
#include "test_util.h"

#ifndef SKETCHRESTORE_CLI_PATH
#error "SKETCHRESTORE_CLI_PATH must point at the CLI binary"
#endif

namespace sketchrestore {
namespace {

int Run(const std::string& args) {
  const std::string cmd = std::string(SKETCHRESTORE_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string Slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CliFixture {
  testing::TempDir dir{"cli"};
  std::string d = dir.path().string();
  SynthSpec spec = [] {
    SynthSpec s;
    s.width = 64;
    s.height = 56;
    s.seed = 9;
    return s;
  }();
  SynthCase c = Generate(spec);

  CliFixture() {
    std::ofstream(dir / "spec.json") << SynthSpecToJson(spec);
    REQUIRE(Run("synth --spec " + d + "/spec.json " + d + "/case") == 0);
  }
};

TEST_CASE("synth writes the case files") {
  CliFixture f;
  CHECK(LoadImage(f.dir / "case/truth.png") == f.c.truth);
  CHECK(LoadImage(f.dir / "case/degraded.png") == f.c.degraded);
  CHECK(LoadMask(f.dir / "case/mask.png") == f.c.text_mask);
  CHECK(Slurp(f.dir / "case/spec.json").find("known_good_threshold") != std::string::npos);
}

TEST_CASE("mask then inpaint equals the pipeline's third stage") {
  CliFixture f;
  const std::string d = f.d;
  REQUIRE(Run("mask --threshold 73 --rule luma " + d + "/case/degraded.png " + d + "/m.png " + d +
              "/w.png") == 0);
  REQUIRE(Run("inpaint --min-neighbors 3 --max-iters 10000 --residual leave " + d +
              "/case/degraded.png " + d + "/m.png " + d + "/i.png --report " + d + "/r.json") == 0);
  CHECK(Slurp(f.dir / "r.json").find("iterations_run") != std::string::npos);

  std::ofstream(f.dir / "cfg.json")
      << R"({"input":"case/degraded.png","output_dir":"run","threshold":{"value":73}})";
  REQUIRE(Run("pipeline --config " + d + "/cfg.json") == 0);
  CHECK(LoadImage(f.dir / "i.png") == LoadImage(f.dir / "run/03_inpainted.png"));
  CHECK(LoadImage(f.dir / "w.png") == LoadImage(f.dir / "run/02_whiteout.png"));
  CHECK(LoadMask(f.dir / "m.png") == f.c.text_mask);
}

TEST_CASE("pipeline is bit-reproducible") {
  CliFixture f;
  std::ofstream(f.dir / "a.json")
      << R"({"input":"case/degraded.png","output_dir":"a","threshold":{"value":73},)"
      << R"("wavelet":{"levels":4,"gains":[1.5,1.2,1,1]}})";
  std::ofstream(f.dir / "b.json")
      << R"({"input":"case/degraded.png","output_dir":"b","threshold":{"value":73},)"
      << R"("wavelet":{"levels":4,"gains":[1.5,1.2,1,1]}})";
  REQUIRE(Run("pipeline --config " + f.d + "/a.json") == 0);
  REQUIRE(Run("pipeline --config " + f.d + "/b.json") == 0);
  for (const char* name : {"01_original.png", "02_whiteout.png", "03_inpainted.png", "04_filtered.png"}) {
    CHECK(Slurp(f.dir / (std::string("a/") + name)) == Slurp(f.dir / (std::string("b/") + name)));
  }
}

TEST_CASE("wavelet, overlay and compare subcommands") {
  CliFixture f;
  const std::string d = f.d;
  REQUIRE(Run("wavelet --levels 3 --gains 1,1,1 " + d + "/case/truth.png " + d + "/wv.ppm") == 0);
  CHECK(LoadImage(f.dir / "wv.ppm") == f.c.truth);
  REQUIRE(Run("wavelet --levels 2 --gains 2,1,1 --dump " + d + "/planes " + d +
              "/case/truth.png " + d + "/wv2.png") == 0);
  CHECK(std::filesystem::exists(f.dir / "planes/r_detail_1.png"));
  CHECK(Run("wavelet --levels 3 --gains 1,1 " + d + "/case/truth.png " + d + "/x.png") == 1);
  CHECK(Run("wavelet --levels 0 --gains 1 " + d + "/case/truth.png " + d + "/x.png") == 1);

  REQUIRE(Run("overlay --tx 0 --ty 0 --scale 1 --rot 0 --alpha 0 " + d + "/case/truth.png " + d +
              "/case/degraded.png " + d + "/ov.png") == 0);
  CHECK(LoadImage(f.dir / "ov.png") == f.c.truth);
  CHECK(Run("overlay --tx -3.5 --ty 2 --scale 1.2 --rot 10 --alpha 0.5 " + d + "/case/truth.png " +
            d + "/case/degraded.png " + d + "/ov2.png") == 0);
  CHECK(Run("overlay --tx 0 --ty 0 --scale 1 --rot 0 --alpha 1.5 " + d + "/case/truth.png " + d +
            "/case/degraded.png " + d + "/ov3.png") == 1);

  std::ofstream(f.dir / "la.json")
      << R"({"left_eye":[0,0],"right_eye":[4,0],"nose_tip":[2,3],"mouth_center":[2,6]})";
  std::ofstream(f.dir / "lb.json")
      << R"({"left_eye":[0,0],"right_eye":[8,0],"nose_tip":[4,6],"mouth_center":[4,12]})";
  const std::string cmd = std::string(SKETCHRESTORE_CLI_PATH) + " compare --landmarks-a " + d +
                          "/la.json --landmarks-b " + d + "/lb.json --tol 1e-9 --images " + d +
                          "/case/truth.png " + d + "/case/truth.png --region " + d +
                          "/case/mask.png > " + d + "/cmp.json";
  REQUIRE(std::system(cmd.c_str()) == 0);
  const std::string report = Slurp(f.dir / "cmp.json");
  CHECK(report.find("\"coincidence_score\": 0.0") != std::string::npos);
  CHECK(report.find("true") != std::string::npos);
  CHECK(Run("compare --landmarks-a " + d + "/la.json --landmarks-b " + d + "/lb.json --tol 0.1 --images " +
            d + "/case/truth.png " + d + "/case/truth.png") == 1);
}

TEST_CASE("exit codes") {
  CliFixture f;
  const std::string d = f.d;
  CHECK(Run("") == 1);
  CHECK(Run("mask --threshold 300 a b c") == 1);
  CHECK(Run("mask --threshold 10 " + d + "/missing.png " + d + "/m.png " + d + "/w.png") == 2);

  std::ofstream(f.dir / "missing_input.json")
      << R"({"input":"nope.png","output_dir":"never","threshold":{"value":73}})";
  CHECK(Run("pipeline --config " + d + "/missing_input.json") == 2);
  CHECK_FALSE(std::filesystem::exists(f.dir / "never"));

  std::ofstream(f.dir / "bad.json") << R"({"input":"case/degraded.png","output_dir":"o"})";
  CHECK(Run("pipeline --config " + d + "/bad.json") == 1);
  CHECK(Run("pipeline --config " + d + "/absent.json") == 2);
}

}  // namespace
}  // namespace sketchrestore
