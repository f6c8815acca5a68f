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


#ifndef SKETCHRESTORE_COMPOSE_H_
#define SKETCHRESTORE_COMPOSE_H_

#include <array>
#include <filesystem>
#include <optional>
#include <string>

#include "sketchrestore/raster.h"

namespace sketchrestore {

// Similarity placement of a top layer plus its opacity. Scaling and rotation
// act about the image centers: an input point p lands at
//   c_out + scale * R(rotation) * (p - c_in) + (tx, ty)
// where c = ((w-1)/2, (h-1)/2) and rotation is counter-clockwise in degrees
// in image coordinates (y down).
struct OverlayTransform {
  double tx = 0.0;
  double ty = 0.0;
  double scale = 1.0;
  double rotation_deg = 0.0;
  double alpha = 1.0;

  void Validate() const;

  friend bool operator==(const OverlayTransform&, const OverlayTransform&) = default;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct LandmarkSet {
  Point left_eye;
  Point right_eye;
  Point nose_tip;
  Point mouth_center;

  void Validate() const;
};

// {"left_eye":[x,y],"right_eye":[x,y],"nose_tip":[x,y],"mouth_center":[x,y]}
LandmarkSet ParseLandmarksJson(const std::string& text);
LandmarkSet LoadLandmarks(const std::filesystem::path& path);

// Bilinear resampling of `raster` placed by `t` onto an out_w x out_h canvas.
// Samples falling outside the source are white. `t.alpha` is ignored.
Raster Warp(const Raster& raster, const OverlayTransform& t, int out_w, int out_h);

// out = round((1 - alpha) * base + alpha * top), per channel.
Raster Blend(const Raster& base, const Raster& top, double alpha);

// Warp `top` onto the canvas of `base`, then blend with t.alpha.
Raster Overlay(const Raster& base, const Raster& top, const OverlayTransform& t);

// Mean absolute per-channel difference over the region, in [0,255].
double CoincidenceScore(const Raster& a, const Raster& b, const Mask& region);

struct LandmarkRatios {
  double span_over_eye_nose = 0.0;
  double eye_nose_over_nose_mouth = 0.0;
};

LandmarkRatios ComputeLandmarkRatios(const LandmarkSet& l);

struct PortraitComparison {
  LandmarkRatios a;
  LandmarkRatios b;
  std::array<double, 2> abs_diff = {0.0, 0.0};
  std::array<bool, 2> coincident = {false, false};
  double tolerance = 0.0;
  std::optional<double> pixel_score;
};

PortraitComparison ComparePortraits(const LandmarkSet& la, const LandmarkSet& lb,
                                    double tol);
// Adds the CoincidenceScore of the two images over `region`.
PortraitComparison ComparePortraits(const Raster& a, const LandmarkSet& la, const Raster& b,
                                    const LandmarkSet& lb, double tol, const Mask& region);

std::string ComparisonToJson(const PortraitComparison& cmp);

}  // namespace sketchrestore

#endif  // SKETCHRESTORE_COMPOSE_H_
