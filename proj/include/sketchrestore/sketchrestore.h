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


/*
 * C interface to the sketchrestore library.
 *
 * Objects are opaque handles created by *_create / *_load / operation
 * functions and released with the matching *_destroy. Every fallible call
 * returns an srst_status; on failure, srst_last_error() returns a message
 * describing the most recent failure on the calling thread. Output handles
 * are only written on success.
 */
#ifndef SKETCHRESTORE_SKETCHRESTORE_H_
#define SKETCHRESTORE_SKETCHRESTORE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SKETCHRESTORE_BUILDING)
#define SRST_API __declspec(dllexport)
#else
#define SRST_API __declspec(dllimport)
#endif
#else
#define SRST_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum srst_status {
  SRST_OK = 0,
  SRST_ERR_NOT_FOUND = 1,
  SRST_ERR_UNSUPPORTED_FORMAT = 2,
  SRST_ERR_CORRUPT_FILE = 3,
  SRST_ERR_IO = 4,
  SRST_ERR_DIMENSION_MISMATCH = 5,
  SRST_ERR_INVALID_ARGUMENT = 6,
  SRST_ERR_INVALID_LEVELS = 7,
  SRST_ERR_ALPHA_OUT_OF_RANGE = 8,
  SRST_ERR_EMPTY_REGION = 9,
  SRST_ERR_DEGENERATE_LANDMARKS = 10,
  SRST_ERR_INVALID_SPEC = 11,
  SRST_ERR_BAD_CONFIG = 12,
  SRST_ERR_INTERNAL = 13
} srst_status;

typedef enum srst_channel_rule {
  SRST_RULE_LUMA = 0,
  SRST_RULE_MAX_CHANNEL = 1,
  SRST_RULE_MIN_CHANNEL = 2
} srst_channel_rule;

typedef enum srst_residual_policy {
  SRST_RESIDUAL_LEAVE = 0,
  SRST_RESIDUAL_FILL_NEAREST = 1
} srst_residual_policy;

typedef struct srst_raster srst_raster;
typedef struct srst_mask srst_mask;

typedef struct srst_inpaint_config {
  int min_neighbors;
  int max_iterations;
  srst_residual_policy residual_policy;
} srst_inpaint_config;

typedef struct srst_inpaint_report {
  int iterations_run;
  uint64_t filled_count;
  uint64_t remaining_masked;
  uint64_t residual_filled;
} srst_inpaint_report;

typedef struct srst_overlay_transform {
  double tx;
  double ty;
  double scale;
  double rotation_deg;
  double alpha;
} srst_overlay_transform;

/* Points in the order left_eye, right_eye, nose_tip, mouth_center. */
typedef struct srst_landmarks {
  double x[4];
  double y[4];
} srst_landmarks;

SRST_API const char* srst_version(void);
SRST_API const char* srst_status_name(srst_status status);
SRST_API const char* srst_last_error(void);

/* Strings returned through char** out-parameters. */
SRST_API void srst_string_free(char* s);

/* ---- rasters and masks ---- */

SRST_API srst_status srst_raster_create(int width, int height, srst_raster** out);
/* `rgb` holds width*height*3 bytes, row-major. */
SRST_API srst_status srst_raster_from_rgb(int width, int height, const uint8_t* rgb,
                                          srst_raster** out);
SRST_API void srst_raster_destroy(srst_raster* raster);
SRST_API int srst_raster_width(const srst_raster* raster);
SRST_API int srst_raster_height(const srst_raster* raster);
/* Borrowed pointer to width*height*3 bytes; valid until the raster is destroyed. */
SRST_API const uint8_t* srst_raster_data(const srst_raster* raster);
SRST_API srst_status srst_raster_load(const char* path, srst_raster** out);
SRST_API srst_status srst_raster_save(const srst_raster* raster, const char* path);
SRST_API int srst_raster_equal(const srst_raster* a, const srst_raster* b);

SRST_API srst_status srst_mask_create(int width, int height, srst_mask** out);
SRST_API void srst_mask_destroy(srst_mask* mask);
SRST_API int srst_mask_width(const srst_mask* mask);
SRST_API int srst_mask_height(const srst_mask* mask);
SRST_API int srst_mask_get(const srst_mask* mask, int x, int y);
SRST_API srst_status srst_mask_set(srst_mask* mask, int x, int y, int value);
SRST_API srst_status srst_mask_load(const char* path, srst_mask** out);
SRST_API srst_status srst_mask_save(const srst_mask* mask, const char* path);
SRST_API void srst_mask_stats(const srst_mask* mask, uint64_t* masked_count,
                              double* fraction);

/* ---- masking ---- */

SRST_API srst_status srst_build_mask(const srst_raster* raster, int threshold,
                                     srst_channel_rule rule, srst_mask** out);
SRST_API srst_status srst_whiteout(const srst_raster* raster, const srst_mask* mask,
                                   srst_raster** out);

/* ---- inpainting ---- */

SRST_API srst_inpaint_config srst_inpaint_config_default(void);
/* `residual_out` and `report` may be NULL. */
SRST_API srst_status srst_inpaint(const srst_raster* raster, const srst_mask* mask,
                                  const srst_inpaint_config* config, srst_raster** out,
                                  srst_mask** residual_out, srst_inpaint_report* report);
SRST_API srst_status srst_inpaint_report_save(const srst_inpaint_report* report,
                                              const char* path);

/* ---- wavelet enhancement ---- */

/* `gains` holds `levels` per-scale gains, finest first. */
SRST_API srst_status srst_wavelet_filter(const srst_raster* raster, int levels,
                                         const double* gains, double residual_gain,
                                         srst_raster** out);
/* Parses "g1,...,gJ[,residual]"; `gains_out` must hold `levels` doubles. */
SRST_API srst_status srst_parse_gains(const char* text, int levels, double* gains_out,
                                      double* residual_gain_out);
/* Writes <dir>/<channel>_detail_<j>.png and <channel>_residual.png previews. */
SRST_API srst_status srst_wavelet_dump(const srst_raster* raster, int levels,
                                       const char* dir);

/* ---- composition and comparison ---- */

SRST_API srst_status srst_warp(const srst_raster* raster, const srst_overlay_transform* t,
                               int out_width, int out_height, srst_raster** out);
SRST_API srst_status srst_blend(const srst_raster* base, const srst_raster* top,
                                double alpha, srst_raster** out);
/* Warps `top` onto the canvas of `base` and blends with t->alpha. */
SRST_API srst_status srst_overlay(const srst_raster* base, const srst_raster* top,
                                  const srst_overlay_transform* t, srst_raster** out);
SRST_API srst_status srst_coincidence_score(const srst_raster* a, const srst_raster* b,
                                            const srst_mask* region, double* score);
SRST_API srst_status srst_landmarks_load(const char* path, srst_landmarks* out);
/* ratios[0] = eye span / eye-to-nose, ratios[1] = eye-to-nose / nose-to-mouth. */
SRST_API srst_status srst_landmark_ratios(const srst_landmarks* l, double ratios[2]);
/* JSON report; images and region may all be NULL, otherwise all three are
 * required and a pixel coincidence score is included. */
SRST_API srst_status srst_compare_portraits(const srst_landmarks* a, const srst_landmarks* b,
                                            double tol, const srst_raster* image_a,
                                            const srst_raster* image_b,
                                            const srst_mask* region, char** json_out);

/* ---- synthetic corpus and pipeline ---- */

/* Reads a synth spec JSON and writes truth.png, degraded.png, mask.png and
 * spec.json into out_dir. */
SRST_API srst_status srst_synth_generate(const char* spec_path, const char* out_dir);
/* Runs the staged pipeline described by a JSON config file. `report_json`
 * may be NULL. */
SRST_API srst_status srst_run_pipeline(const char* config_path, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* SKETCHRESTORE_SKETCHRESTORE_H_ */
