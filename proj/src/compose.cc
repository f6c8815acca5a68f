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


#include "sketchrestore/compose.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "sketchrestore/error.h"

namespace sketchrestore {
namespace {

using nlohmann::json;

// Tolerance for treating an inverse-mapped coordinate as on the grid edge.
constexpr double kEdgeEps = 1e-9;

double Distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

bool Finite(const Point& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

Point ParsePoint(const json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw Error(ErrorCode::kBadConfig, std::string("landmarks: missing '") + key + "'");
  }
  const json& v = doc.at(key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw Error(ErrorCode::kBadConfig, std::string("landmarks: '") + key + "' must be [x,y]");
  }
  return Point{v[0].get<double>(), v[1].get<double>()};
}

double Lerp(double a, double b, double t) { return a + (b - a) * t; }

}  // namespace

void OverlayTransform::Validate() const {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw Error(ErrorCode::kInvalidArgument, "overlay scale must be positive");
  }
  if (!std::isfinite(tx) || !std::isfinite(ty) || !std::isfinite(rotation_deg)) {
    throw Error(ErrorCode::kInvalidArgument, "overlay transform must be finite");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::kAlphaOutOfRange, "alpha must be in [0,1]");
  }
}

void LandmarkSet::Validate() const {
  if (!Finite(left_eye) || !Finite(right_eye) || !Finite(nose_tip) || !Finite(mouth_center)) {
    throw Error(ErrorCode::kDegenerateLandmarks, "landmark coordinates must be finite");
  }
}

LandmarkSet ParseLandmarksJson(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kBadConfig, std::string("landmarks: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::kBadConfig, "landmarks: expected an object");
  LandmarkSet l{ParsePoint(doc, "left_eye"), ParsePoint(doc, "right_eye"),
                ParsePoint(doc, "nose_tip"), ParsePoint(doc, "mouth_center")};
  l.Validate();
  return l;
}

LandmarkSet LoadLandmarks(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kNotFound, "cannot open landmarks file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseLandmarksJson(ss.str());
}

Raster Warp(const Raster& raster, const OverlayTransform& t, int out_w, int out_h) {
  if (!(t.scale > 0.0)) throw Error(ErrorCode::kInvalidArgument, "warp scale must be positive");
  Raster out(out_w, out_h, kWhite);
  const int w = raster.width();
  const int h = raster.height();
  const double cx_in = (w - 1) / 2.0;
  const double cy_in = (h - 1) / 2.0;
  const double cx_out = (out_w - 1) / 2.0;
  const double cy_out = (out_h - 1) / 2.0;
  const double theta = t.rotation_deg * std::numbers::pi / 180.0;
  const double c = std::cos(theta);
  const double s = std::sin(theta);

  for (int y = 0; y < out_h; ++y) {
    for (int x = 0; x < out_w; ++x) {
      // Inverse map: p = c_in + R^T * (q - c_out - t) / scale.
      const double qx = (x - cx_out - t.tx) / t.scale;
      const double qy = (y - cy_out - t.ty) / t.scale;
      double u = cx_in + c * qx + s * qy;
      double v = cy_in - s * qx + c * qy;
      if (u < -kEdgeEps || v < -kEdgeEps || u > (w - 1) + kEdgeEps || v > (h - 1) + kEdgeEps) {
        continue;
      }
      u = std::clamp(u, 0.0, static_cast<double>(w - 1));
      v = std::clamp(v, 0.0, static_cast<double>(h - 1));
      const int x0 = static_cast<int>(std::floor(u));
      const int y0 = static_cast<int>(std::floor(v));
      const int x1 = std::min(x0 + 1, w - 1);
      const int y1 = std::min(y0 + 1, h - 1);
      const double fx = u - x0;
      const double fy = v - y0;
      const Rgb& p00 = raster.at(x0, y0);
      const Rgb& p10 = raster.at(x1, y0);
      const Rgb& p01 = raster.at(x0, y1);
      const Rgb& p11 = raster.at(x1, y1);
      Rgb& dst = out.at(x, y);
      for (int ch = 0; ch < 3; ++ch) {
        const double top = Lerp(p00[ch], p10[ch], fx);
        const double bottom = Lerp(p01[ch], p11[ch], fx);
        dst[ch] = QuantizeChannel(Lerp(top, bottom, fy));
      }
    }
  }
  return out;
}

Raster Blend(const Raster& base, const Raster& top, double alpha) {
  if (!base.SameShape(top)) throw Error(ErrorCode::kDimensionMismatch, "blend size mismatch");
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::kAlphaOutOfRange, "alpha must be in [0,1]");
  }
  Raster out(base.width(), base.height());
  for (size_t i = 0; i < out.size(); ++i) {
    for (int ch = 0; ch < 3; ++ch) {
      out[i][ch] = QuantizeChannel((1.0 - alpha) * base[i][ch] + alpha * top[i][ch]);
    }
  }
  return out;
}

Raster Overlay(const Raster& base, const Raster& top, const OverlayTransform& t) {
  t.Validate();
  return Blend(base, Warp(top, t, base.width(), base.height()), t.alpha);
}

double CoincidenceScore(const Raster& a, const Raster& b, const Mask& region) {
  if (!a.SameShape(b) || !region.Matches(a)) {
    throw Error(ErrorCode::kDimensionMismatch, "coincidence inputs differ in size");
  }
  long total = 0;
  size_t count = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (!region[i]) continue;
    for (int ch = 0; ch < 3; ++ch) total += std::abs(int{a[i][ch]} - int{b[i][ch]});
    ++count;
  }
  if (count == 0) throw Error(ErrorCode::kEmptyRegion, "coincidence region is empty");
  return static_cast<double>(total) / (3.0 * static_cast<double>(count));
}

LandmarkRatios ComputeLandmarkRatios(const LandmarkSet& l) {
  l.Validate();
  const Point eye_mid{(l.left_eye.x + l.right_eye.x) / 2.0,
                      (l.left_eye.y + l.right_eye.y) / 2.0};
  const double eye_span = Distance(l.left_eye, l.right_eye);
  const double eye_to_nose = Distance(eye_mid, l.nose_tip);
  const double nose_to_mouth = Distance(l.nose_tip, l.mouth_center);
  if (eye_span == 0.0 || eye_to_nose == 0.0 || nose_to_mouth == 0.0) {
    throw Error(ErrorCode::kDegenerateLandmarks, "landmarks coincide; distance ratio undefined");
  }
  return LandmarkRatios{eye_span / eye_to_nose, eye_to_nose / nose_to_mouth};
}

PortraitComparison ComparePortraits(const LandmarkSet& la, const LandmarkSet& lb, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  PortraitComparison cmp;
  cmp.a = ComputeLandmarkRatios(la);
  cmp.b = ComputeLandmarkRatios(lb);
  cmp.tolerance = tol;
  cmp.abs_diff = {std::abs(cmp.a.span_over_eye_nose - cmp.b.span_over_eye_nose),
                  std::abs(cmp.a.eye_nose_over_nose_mouth - cmp.b.eye_nose_over_nose_mouth)};
  cmp.coincident = {cmp.abs_diff[0] <= tol, cmp.abs_diff[1] <= tol};
  return cmp;
}

PortraitComparison ComparePortraits(const Raster& a, const LandmarkSet& la, const Raster& b,
                                    const LandmarkSet& lb, double tol, const Mask& region) {
  PortraitComparison cmp = ComparePortraits(la, lb, tol);
  cmp.pixel_score = CoincidenceScore(a, b, region);
  return cmp;
}

std::string ComparisonToJson(const PortraitComparison& cmp) {
  auto ratios = [](const LandmarkRatios& r) {
    return json{{"eye_span_over_eye_to_nose", r.span_over_eye_nose},
                {"eye_to_nose_over_nose_to_mouth", r.eye_nose_over_nose_mouth}};
  };
  json doc{{"ratios_a", ratios(cmp.a)},
           {"ratios_b", ratios(cmp.b)},
           {"abs_diff", cmp.abs_diff},
           {"coincident", cmp.coincident},
           {"tolerance", cmp.tolerance}};
  if (cmp.pixel_score) doc["coincidence_score"] = *cmp.pixel_score;
  return doc.dump(2);
}

}  // namespace sketchrestore
