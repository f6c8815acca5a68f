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


// Command-line front end. Talks to the library exclusively through the C API.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sketchrestore/sketchrestore.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitIo = 2;
constexpr int kExitInternal = 3;

struct RasterDeleter {
  void operator()(srst_raster* r) const { srst_raster_destroy(r); }
};
struct MaskDeleter {
  void operator()(srst_mask* m) const { srst_mask_destroy(m); }
};
struct StringDeleter {
  void operator()(char* s) const { srst_string_free(s); }
};
using RasterPtr = std::unique_ptr<srst_raster, RasterDeleter>;
using MaskPtr = std::unique_ptr<srst_mask, MaskDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Thrown to unwind out of a subcommand with the exit code already chosen.
struct ExitRequest {
  int code;
};

int ExitCodeFor(srst_status status) {
  switch (status) {
    case SRST_OK:
      return kExitOk;
    case SRST_ERR_NOT_FOUND:
    case SRST_ERR_UNSUPPORTED_FORMAT:
    case SRST_ERR_CORRUPT_FILE:
    case SRST_ERR_IO:
      return kExitIo;
    case SRST_ERR_INTERNAL:
      return kExitInternal;
    default:
      return kExitBadInput;
  }
}

void Check(srst_status status) {
  if (status == SRST_OK) return;
  std::cerr << "error: " << srst_status_name(status) << ": " << srst_last_error() << "\n";
  throw ExitRequest{ExitCodeFor(status)};
}

RasterPtr LoadRaster(const std::string& path) {
  srst_raster* r = nullptr;
  Check(srst_raster_load(path.c_str(), &r));
  return RasterPtr(r);
}

MaskPtr LoadMask(const std::string& path) {
  srst_mask* m = nullptr;
  Check(srst_mask_load(path.c_str(), &m));
  return MaskPtr(m);
}

srst_landmarks LoadLandmarks(const std::string& path) {
  srst_landmarks l{};
  Check(srst_landmarks_load(path.c_str(), &l));
  return l;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restore drawings hidden under handwritten text", "sketchrestore"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(srst_version()));

  // mask
  int threshold = 0;
  std::string rule = "luma";
  std::string mask_in, mask_out, whiteout_out;
  auto* mask_cmd = app.add_subcommand("mask", "Threshold dark pixels into a mask and a whiteout image");
  mask_cmd->add_option("--threshold", threshold, "Darkness threshold; pixels strictly below are masked")
      ->required()
      ->check(CLI::Range(0, 255));
  mask_cmd->add_option("--rule", rule, "Darkness statistic")
      ->check(CLI::IsMember({"luma", "max", "min"}));
  mask_cmd->add_option("IN", mask_in)->required();
  mask_cmd->add_option("OUT_MASK", mask_out)->required();
  mask_cmd->add_option("OUT_WHITEOUT", whiteout_out)->required();

  // inpaint
  srst_inpaint_config inpaint_cfg = srst_inpaint_config_default();
  std::string residual = "leave";
  std::string inpaint_in, inpaint_mask, inpaint_out, report_path;
  auto* inpaint_cmd = app.add_subcommand("inpaint", "Fill masked pixels by iterative neighbor averaging");
  inpaint_cmd->add_option("--min-neighbors", inpaint_cfg.min_neighbors, "Unmasked 8-neighbors needed to fill")
      ->check(CLI::Range(1, 8));
  inpaint_cmd->add_option("--max-iters", inpaint_cfg.max_iterations, "Iteration cap")
      ->check(CLI::PositiveNumber);
  inpaint_cmd->add_option("--residual", residual, "What to do with pixels left unfilled")
      ->check(CLI::IsMember({"leave", "fill-nearest"}));
  inpaint_cmd->add_option("IN", inpaint_in)->required();
  inpaint_cmd->add_option("MASK", inpaint_mask)->required();
  inpaint_cmd->add_option("OUT", inpaint_out)->required();
  inpaint_cmd->add_option("--report", report_path, "Write the inpaint report as JSON");

  // wavelet
  int levels = 0;
  std::string gains_text, wavelet_in, wavelet_out, dump_dir;
  auto* wavelet_cmd = app.add_subcommand("wavelet", "Multiscale enhancement with per-scale gains");
  wavelet_cmd->add_option("--levels", levels, "Number of detail scales")->required();
  wavelet_cmd->add_option("--gains", gains_text, "g1,...,gJ[,residual], finest scale first")
      ->required();
  wavelet_cmd->add_option("--dump", dump_dir, "Also write per-plane previews into this directory");
  wavelet_cmd->add_option("IN", wavelet_in)->required();
  wavelet_cmd->add_option("OUT", wavelet_out)->required();

  // overlay
  srst_overlay_transform transform{0.0, 0.0, 1.0, 0.0, 0.5};
  std::string base_path, top_path, overlay_out;
  auto* overlay_cmd = app.add_subcommand("overlay", "Place TOP over BASE and alpha-blend");
  overlay_cmd->add_option("--tx", transform.tx)->required();
  overlay_cmd->add_option("--ty", transform.ty)->required();
  overlay_cmd->add_option("--scale", transform.scale)->required();
  overlay_cmd->add_option("--rot", transform.rotation_deg, "Degrees")->required();
  overlay_cmd->add_option("--alpha", transform.alpha, "Opacity of TOP")->required();
  overlay_cmd->add_option("BASE", base_path)->required();
  overlay_cmd->add_option("TOP", top_path)->required();
  overlay_cmd->add_option("OUT", overlay_out)->required();

  // compare
  std::string landmarks_a, landmarks_b, region_path;
  std::vector<std::string> images;
  double tol = 0.0;
  auto* compare_cmd = app.add_subcommand("compare", "Compare landmark distance ratios of two portraits");
  compare_cmd->add_option("--landmarks-a", landmarks_a)->required();
  compare_cmd->add_option("--landmarks-b", landmarks_b)->required();
  compare_cmd->add_option("--tol", tol)->required();
  auto* images_opt = compare_cmd->add_option("--images", images)->expected(2);
  auto* region_opt = compare_cmd->add_option("--region", region_path);
  images_opt->needs(region_opt);
  region_opt->needs(images_opt);

  // synth
  std::string spec_path, synth_dir;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a ground-truth test case");
  synth_cmd->add_option("--spec", spec_path)->required();
  synth_cmd->add_option("OUT_DIR", synth_dir)->required();

  // pipeline
  std::string config_path;
  auto* pipeline_cmd = app.add_subcommand("pipeline", "Run every stage from a JSON config");
  pipeline_cmd->add_option("--config", config_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*mask_cmd) {
      RasterPtr in = LoadRaster(mask_in);
      const srst_channel_rule r = rule == "max"   ? SRST_RULE_MAX_CHANNEL
                                  : rule == "min" ? SRST_RULE_MIN_CHANNEL
                                                  : SRST_RULE_LUMA;
      srst_mask* m = nullptr;
      Check(srst_build_mask(in.get(), threshold, r, &m));
      MaskPtr mask(m);
      srst_raster* w = nullptr;
      Check(srst_whiteout(in.get(), mask.get(), &w));
      RasterPtr white(w);
      Check(srst_mask_save(mask.get(), mask_out.c_str()));
      Check(srst_raster_save(white.get(), whiteout_out.c_str()));
      uint64_t count = 0;
      double fraction = 0.0;
      srst_mask_stats(mask.get(), &count, &fraction);
      std::printf("masked %llu pixels (%.4f)\n", static_cast<unsigned long long>(count), fraction);
    } else if (*inpaint_cmd) {
      inpaint_cfg.residual_policy =
          residual == "fill-nearest" ? SRST_RESIDUAL_FILL_NEAREST : SRST_RESIDUAL_LEAVE;
      RasterPtr in = LoadRaster(inpaint_in);
      MaskPtr mask = LoadMask(inpaint_mask);
      srst_raster* o = nullptr;
      srst_inpaint_report report{};
      Check(srst_inpaint(in.get(), mask.get(), &inpaint_cfg, &o, nullptr, &report));
      RasterPtr out(o);
      Check(srst_raster_save(out.get(), inpaint_out.c_str()));
      if (!report_path.empty()) Check(srst_inpaint_report_save(&report, report_path.c_str()));
      std::printf("iterations %d, filled %llu, remaining %llu\n", report.iterations_run,
                  static_cast<unsigned long long>(report.filled_count),
                  static_cast<unsigned long long>(report.remaining_masked));
    } else if (*wavelet_cmd) {
      if (levels < 1) Check(srst_wavelet_filter(nullptr, levels, nullptr, 1.0, nullptr));
      std::vector<double> gains(static_cast<size_t>(levels));
      double residual_gain = 1.0;
      Check(srst_parse_gains(gains_text.c_str(), levels, gains.data(), &residual_gain));
      RasterPtr in = LoadRaster(wavelet_in);
      srst_raster* o = nullptr;
      Check(srst_wavelet_filter(in.get(), levels, gains.data(), residual_gain, &o));
      RasterPtr out(o);
      Check(srst_raster_save(out.get(), wavelet_out.c_str()));
      if (!dump_dir.empty()) Check(srst_wavelet_dump(in.get(), levels, dump_dir.c_str()));
    } else if (*overlay_cmd) {
      RasterPtr base = LoadRaster(base_path);
      RasterPtr top = LoadRaster(top_path);
      srst_raster* o = nullptr;
      Check(srst_overlay(base.get(), top.get(), &transform, &o));
      RasterPtr out(o);
      Check(srst_raster_save(out.get(), overlay_out.c_str()));
    } else if (*compare_cmd) {
      const srst_landmarks la = LoadLandmarks(landmarks_a);
      const srst_landmarks lb = LoadLandmarks(landmarks_b);
      RasterPtr image_a, image_b;
      MaskPtr region;
      if (!images.empty()) {
        image_a = LoadRaster(images[0]);
        image_b = LoadRaster(images[1]);
        region = LoadMask(region_path);
      }
      char* json = nullptr;
      Check(srst_compare_portraits(&la, &lb, tol, image_a.get(), image_b.get(), region.get(),
                                   &json));
      StringPtr text(json);
      std::printf("%s\n", text.get());
    } else if (*synth_cmd) {
      Check(srst_synth_generate(spec_path.c_str(), synth_dir.c_str()));
    } else if (*pipeline_cmd) {
      Check(srst_run_pipeline(config_path.c_str(), nullptr));
    }
  } catch (const ExitRequest& e) {
    return e.code;
  }
  return kExitOk;
}
