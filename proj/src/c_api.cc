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


#include "sketchrestore/sketchrestore.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "sketchrestore/compose.h"
#include "sketchrestore/error.h"
#include "sketchrestore/image_io.h"
#include "sketchrestore/inpaint.h"
#include "sketchrestore/masking.h"
#include "sketchrestore/pipeline.h"
#include "sketchrestore/synth.h"
#include "sketchrestore/wavelet.h"

struct srst_raster {
  sketchrestore::Raster value;
};

struct srst_mask {
  sketchrestore::Mask value;
};

namespace {

namespace sr = sketchrestore;

static_assert(sizeof(sr::Rgb) == 3, "Rgb must be tightly packed for srst_raster_data");

thread_local std::string g_last_error;

srst_status ToStatus(sr::ErrorCode code) {
  switch (code) {
    case sr::ErrorCode::kNotFound: return SRST_ERR_NOT_FOUND;
    case sr::ErrorCode::kUnsupportedFormat: return SRST_ERR_UNSUPPORTED_FORMAT;
    case sr::ErrorCode::kCorruptFile: return SRST_ERR_CORRUPT_FILE;
    case sr::ErrorCode::kIoError: return SRST_ERR_IO;
    case sr::ErrorCode::kDimensionMismatch: return SRST_ERR_DIMENSION_MISMATCH;
    case sr::ErrorCode::kInvalidArgument: return SRST_ERR_INVALID_ARGUMENT;
    case sr::ErrorCode::kInvalidLevels: return SRST_ERR_INVALID_LEVELS;
    case sr::ErrorCode::kAlphaOutOfRange: return SRST_ERR_ALPHA_OUT_OF_RANGE;
    case sr::ErrorCode::kEmptyRegion: return SRST_ERR_EMPTY_REGION;
    case sr::ErrorCode::kDegenerateLandmarks: return SRST_ERR_DEGENERATE_LANDMARKS;
    case sr::ErrorCode::kInvalidSpec: return SRST_ERR_INVALID_SPEC;
    case sr::ErrorCode::kBadConfig: return SRST_ERR_BAD_CONFIG;
    case sr::ErrorCode::kInternal: return SRST_ERR_INTERNAL;
  }
  return SRST_ERR_INTERNAL;
}

srst_status Fail(srst_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename F>
srst_status Guard(F&& body) {
  try {
    body();
    return SRST_OK;
  } catch (const sr::Error& e) {
    return Fail(ToStatus(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(SRST_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(SRST_ERR_INTERNAL, e.what());
  }
}

#define SRST_REQUIRE(cond)                                                          \
  do {                                                                              \
    if (!(cond)) return Fail(SRST_ERR_INVALID_ARGUMENT, "null or invalid argument: " #cond); \
  } while (0)

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sr::InpaintConfig ToConfig(const srst_inpaint_config& c) {
  sr::InpaintConfig out;
  out.min_neighbors = c.min_neighbors;
  out.max_iterations = c.max_iterations;
  out.residual_policy = c.residual_policy == SRST_RESIDUAL_FILL_NEAREST
                            ? sr::ResidualPolicy::kFillNearest
                            : sr::ResidualPolicy::kLeave;
  return out;
}

sr::OverlayTransform ToTransform(const srst_overlay_transform& t) {
  return sr::OverlayTransform{t.tx, t.ty, t.scale, t.rotation_deg, t.alpha};
}

sr::LandmarkSet ToLandmarks(const srst_landmarks& l) {
  return sr::LandmarkSet{{l.x[0], l.y[0]}, {l.x[1], l.y[1]}, {l.x[2], l.y[2]}, {l.x[3], l.y[3]}};
}

srst_landmarks FromLandmarks(const sr::LandmarkSet& l) {
  const sr::Point pts[4] = {l.left_eye, l.right_eye, l.nose_tip, l.mouth_center};
  srst_landmarks out;
  for (int i = 0; i < 4; ++i) {
    out.x[i] = pts[i].x;
    out.y[i] = pts[i].y;
  }
  return out;
}

srst_raster* Wrap(sr::Raster r) { return new srst_raster{std::move(r)}; }
srst_mask* Wrap(sr::Mask m) { return new srst_mask{std::move(m)}; }

}  // namespace

extern "C" {

const char* srst_version(void) { return "0.1.0"; }

const char* srst_status_name(srst_status status) {
  switch (status) {
    case SRST_OK: return "OK";
    case SRST_ERR_NOT_FOUND: return "NotFound";
    case SRST_ERR_UNSUPPORTED_FORMAT: return "UnsupportedFormat";
    case SRST_ERR_CORRUPT_FILE: return "CorruptFile";
    case SRST_ERR_IO: return "IoError";
    case SRST_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case SRST_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case SRST_ERR_INVALID_LEVELS: return "InvalidLevels";
    case SRST_ERR_ALPHA_OUT_OF_RANGE: return "AlphaOutOfRange";
    case SRST_ERR_EMPTY_REGION: return "EmptyRegion";
    case SRST_ERR_DEGENERATE_LANDMARKS: return "DegenerateLandmarks";
    case SRST_ERR_INVALID_SPEC: return "InvalidSpec";
    case SRST_ERR_BAD_CONFIG: return "BadConfig";
    case SRST_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* srst_last_error(void) { return g_last_error.c_str(); }

void srst_string_free(char* s) { std::free(s); }

srst_status srst_raster_create(int width, int height, srst_raster** out) {
  SRST_REQUIRE(out != nullptr);
  return Guard([&] { *out = Wrap(sr::Raster(width, height)); });
}

srst_status srst_raster_from_rgb(int width, int height, const uint8_t* rgb, srst_raster** out) {
  SRST_REQUIRE(out != nullptr && rgb != nullptr);
  return Guard([&] {
    sr::Raster r(width, height);
    std::memcpy(r.pixels().data(), rgb, r.size() * 3);
    *out = Wrap(std::move(r));
  });
}

void srst_raster_destroy(srst_raster* raster) { delete raster; }

int srst_raster_width(const srst_raster* raster) { return raster ? raster->value.width() : 0; }

int srst_raster_height(const srst_raster* raster) { return raster ? raster->value.height() : 0; }

const uint8_t* srst_raster_data(const srst_raster* raster) {
  return raster ? reinterpret_cast<const uint8_t*>(raster->value.pixels().data()) : nullptr;
}

srst_status srst_raster_load(const char* path, srst_raster** out) {
  SRST_REQUIRE(path != nullptr && out != nullptr);
  return Guard([&] { *out = Wrap(sr::LoadImage(path)); });
}

srst_status srst_raster_save(const srst_raster* raster, const char* path) {
  SRST_REQUIRE(raster != nullptr && path != nullptr);
  return Guard([&] { sr::SaveImage(raster->value, path); });
}

int srst_raster_equal(const srst_raster* a, const srst_raster* b) {
  return a != nullptr && b != nullptr && a->value == b->value;
}

srst_status srst_mask_create(int width, int height, srst_mask** out) {
  SRST_REQUIRE(out != nullptr);
  return Guard([&] { *out = Wrap(sr::Mask(width, height)); });
}

void srst_mask_destroy(srst_mask* mask) { delete mask; }

int srst_mask_width(const srst_mask* mask) { return mask ? mask->value.width() : 0; }

int srst_mask_height(const srst_mask* mask) { return mask ? mask->value.height() : 0; }

int srst_mask_get(const srst_mask* mask, int x, int y) {
  if (mask == nullptr || x < 0 || y < 0 || x >= mask->value.width() ||
      y >= mask->value.height()) {
    return 0;
  }
  return mask->value.at(x, y) ? 1 : 0;
}

srst_status srst_mask_set(srst_mask* mask, int x, int y, int value) {
  SRST_REQUIRE(mask != nullptr);
  SRST_REQUIRE(x >= 0 && y >= 0 && x < mask->value.width() && y < mask->value.height());
  mask->value.set(x, y, value != 0);
  return SRST_OK;
}

srst_status srst_mask_load(const char* path, srst_mask** out) {
  SRST_REQUIRE(path != nullptr && out != nullptr);
  return Guard([&] { *out = Wrap(sr::LoadMask(path)); });
}

srst_status srst_mask_save(const srst_mask* mask, const char* path) {
  SRST_REQUIRE(mask != nullptr && path != nullptr);
  return Guard([&] { sr::SaveMask(mask->value, path); });
}

void srst_mask_stats(const srst_mask* mask, uint64_t* masked_count, double* fraction) {
  if (mask == nullptr) return;
  const sr::MaskStats stats = sr::ComputeMaskStats(mask->value);
  if (masked_count) *masked_count = stats.masked_count;
  if (fraction) *fraction = stats.fraction;
}

srst_status srst_build_mask(const srst_raster* raster, int threshold, srst_channel_rule rule,
                            srst_mask** out) {
  SRST_REQUIRE(raster != nullptr && out != nullptr);
  SRST_REQUIRE(rule >= SRST_RULE_LUMA && rule <= SRST_RULE_MIN_CHANNEL);
  return Guard([&] {
    const sr::ThresholdSpec spec{threshold, static_cast<sr::ChannelRule>(rule)};
    *out = Wrap(sr::BuildMask(raster->value, spec));
  });
}

srst_status srst_whiteout(const srst_raster* raster, const srst_mask* mask, srst_raster** out) {
  SRST_REQUIRE(raster != nullptr && mask != nullptr && out != nullptr);
  return Guard([&] { *out = Wrap(sr::Whiteout(raster->value, mask->value)); });
}

srst_inpaint_config srst_inpaint_config_default(void) {
  const sr::InpaintConfig d;
  return srst_inpaint_config{d.min_neighbors, d.max_iterations, SRST_RESIDUAL_LEAVE};
}

srst_status srst_inpaint(const srst_raster* raster, const srst_mask* mask,
                         const srst_inpaint_config* config, srst_raster** out,
                         srst_mask** residual_out, srst_inpaint_report* report) {
  SRST_REQUIRE(raster != nullptr && mask != nullptr && out != nullptr);
  return Guard([&] {
    const sr::InpaintConfig cfg = config ? ToConfig(*config) : sr::InpaintConfig{};
    sr::InpaintResult result = sr::Inpaint(raster->value, mask->value, cfg);
    if (report) {
      *report = srst_inpaint_report{result.report.iterations_run, result.report.filled_count,
                                    result.report.remaining_masked,
                                    result.report.residual_filled};
    }
    srst_raster* image = Wrap(std::move(result.image));
    if (residual_out) {
      try {
        *residual_out = Wrap(std::move(result.residual));
      } catch (...) {
        srst_raster_destroy(image);
        throw;
      }
    }
    *out = image;
  });
}

srst_status srst_inpaint_report_save(const srst_inpaint_report* report, const char* path) {
  SRST_REQUIRE(report != nullptr && path != nullptr);
  return Guard([&] {
    sr::InpaintReport r;
    r.iterations_run = report->iterations_run;
    r.filled_count = report->filled_count;
    r.remaining_masked = report->remaining_masked;
    r.residual_filled = report->residual_filled;
    FILE* f = std::fopen(path, "wb");
    if (f == nullptr) throw sr::Error(sr::ErrorCode::kIoError, std::string("cannot write ") + path);
    const std::string text = sr::InpaintReportToJson(r) + "\n";
    const bool ok = std::fwrite(text.data(), 1, text.size(), f) == text.size();
    if (std::fclose(f) != 0 || !ok) {
      throw sr::Error(sr::ErrorCode::kIoError, std::string("cannot write ") + path);
    }
  });
}

srst_status srst_wavelet_filter(const srst_raster* raster, int levels, const double* gains,
                                double residual_gain, srst_raster** out) {
  SRST_REQUIRE(raster != nullptr && out != nullptr);
  return Guard([&] {
    if (levels < 1) throw sr::Error(sr::ErrorCode::kInvalidLevels, "levels must be at least 1");
    sr::GainVector g = sr::GainVector::Unit(levels);
    if (gains != nullptr) g.gains.assign(gains, gains + levels);
    g.residual_gain = residual_gain;
    *out = Wrap(sr::WaveletFilterRgb(raster->value, levels, g));
  });
}

srst_status srst_parse_gains(const char* text, int levels, double* gains_out,
                             double* residual_gain_out) {
  SRST_REQUIRE(text != nullptr && gains_out != nullptr);
  return Guard([&] {
    const sr::GainVector g = sr::GainVector::Parse(text, levels);
    for (int j = 0; j < levels; ++j) gains_out[j] = g.gains[j];
    if (residual_gain_out) *residual_gain_out = g.residual_gain;
  });
}

srst_status srst_wavelet_dump(const srst_raster* raster, int levels, const char* dir) {
  SRST_REQUIRE(raster != nullptr && dir != nullptr);
  return Guard([&] {
    const std::filesystem::path root(dir);
    std::error_code ec;
    std::filesystem::create_directories(root, ec);
    if (ec) throw sr::Error(sr::ErrorCode::kIoError, "cannot create " + root.string());
    const char* names[3] = {"r", "g", "b"};
    const auto planes = sr::ToPlanes(raster->value);
    for (int c = 0; c < 3; ++c) {
      const sr::WaveletStack stack = sr::Decompose(planes[c], levels);
      for (int j = 0; j < levels; ++j) {
        sr::SavePlanePreview(stack.details[j], root / (std::string(names[c]) + "_detail_" +
                                                       std::to_string(j + 1) + ".png"));
      }
      // The residual carries the image mean, so it is written without the offset.
      sr::PlaneF residual = stack.residual;
      for (double& v : residual.values()) v -= 128.0;
      sr::SavePlanePreview(residual, root / (std::string(names[c]) + "_residual.png"));
    }
  });
}

srst_status srst_warp(const srst_raster* raster, const srst_overlay_transform* t, int out_width,
                      int out_height, srst_raster** out) {
  SRST_REQUIRE(raster != nullptr && t != nullptr && out != nullptr);
  return Guard([&] { *out = Wrap(sr::Warp(raster->value, ToTransform(*t), out_width, out_height)); });
}

srst_status srst_blend(const srst_raster* base, const srst_raster* top, double alpha,
                       srst_raster** out) {
  SRST_REQUIRE(base != nullptr && top != nullptr && out != nullptr);
  return Guard([&] { *out = Wrap(sr::Blend(base->value, top->value, alpha)); });
}

srst_status srst_overlay(const srst_raster* base, const srst_raster* top,
                         const srst_overlay_transform* t, srst_raster** out) {
  SRST_REQUIRE(base != nullptr && top != nullptr && t != nullptr && out != nullptr);
  return Guard([&] { *out = Wrap(sr::Overlay(base->value, top->value, ToTransform(*t))); });
}

srst_status srst_coincidence_score(const srst_raster* a, const srst_raster* b,
                                   const srst_mask* region, double* score) {
  SRST_REQUIRE(a != nullptr && b != nullptr && region != nullptr && score != nullptr);
  return Guard([&] { *score = sr::CoincidenceScore(a->value, b->value, region->value); });
}

srst_status srst_landmarks_load(const char* path, srst_landmarks* out) {
  SRST_REQUIRE(path != nullptr && out != nullptr);
  return Guard([&] { *out = FromLandmarks(sr::LoadLandmarks(path)); });
}

srst_status srst_landmark_ratios(const srst_landmarks* l, double ratios[2]) {
  SRST_REQUIRE(l != nullptr && ratios != nullptr);
  return Guard([&] {
    const sr::LandmarkRatios r = sr::ComputeLandmarkRatios(ToLandmarks(*l));
    ratios[0] = r.span_over_eye_nose;
    ratios[1] = r.eye_nose_over_nose_mouth;
  });
}

srst_status srst_compare_portraits(const srst_landmarks* a, const srst_landmarks* b, double tol,
                                   const srst_raster* image_a, const srst_raster* image_b,
                                   const srst_mask* region, char** json_out) {
  SRST_REQUIRE(a != nullptr && b != nullptr && json_out != nullptr);
  const int given = (image_a != nullptr) + (image_b != nullptr) + (region != nullptr);
  SRST_REQUIRE(given == 0 || given == 3);
  return Guard([&] {
    const sr::PortraitComparison cmp =
        given == 3 ? sr::ComparePortraits(image_a->value, ToLandmarks(*a), image_b->value,
                                          ToLandmarks(*b), tol, region->value)
                   : sr::ComparePortraits(ToLandmarks(*a), ToLandmarks(*b), tol);
    *json_out = CopyString(sr::ComparisonToJson(cmp));
  });
}

srst_status srst_synth_generate(const char* spec_path, const char* out_dir) {
  SRST_REQUIRE(spec_path != nullptr && out_dir != nullptr);
  return Guard([&] { sr::SaveSynthCase(sr::Generate(sr::LoadSynthSpec(spec_path)), out_dir); });
}

srst_status srst_run_pipeline(const char* config_path, char** report_json) {
  SRST_REQUIRE(config_path != nullptr);
  return Guard([&] {
    const sr::PipelineOutcome outcome = sr::RunPipelineFile(config_path);
    if (report_json) *report_json = CopyString(outcome.report_json);
  });
}

}  // extern "C"
