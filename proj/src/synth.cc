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


#include "sketchrestore/synth.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "sketchrestore/error.h"
#include "sketchrestore/image_io.h"
#include "sketchrestore/metrics.h"
#include "sketchrestore/wavelet.h"

namespace sketchrestore {
namespace {

using nlohmann::json;

constexpr int kTruthSmoothingLevels = 4;
constexpr int kMaxSynthDimension = 8192;
constexpr long kMaxStrokeSegments = 50'000'000;

json PsnrJson(double v) { return std::isinf(v) ? json("inf") : json(v); }

// Luma * 1000 in exact integer arithmetic.
int LumaMilli(const Rgb& c) { return 299 * c.r + 587 * c.g + 114 * c.b; }

Raster ChalkField(const SynthSpec& spec, SplitMix64& rng) {
  PlaneF noise(spec.width, spec.height);
  for (double& v : noise.values()) v = rng.NextDouble();
  const PlaneF smooth = Decompose(noise, kTruthSmoothingLevels).residual;
  const auto [lo_it, hi_it] = std::minmax_element(smooth.values().begin(), smooth.values().end());
  const double lo = *lo_it;
  const double range = *hi_it - lo;

  const auto& palette = spec.chalk_palette;
  const int last = static_cast<int>(palette.size()) - 1;
  Raster truth(spec.width, spec.height);
  for (size_t i = 0; i < truth.size(); ++i) {
    const double t = range > 0.0 ? (smooth[i] - lo) / range : 0.5;
    const double pos = t * last;
    const int k = std::min(static_cast<int>(std::floor(pos)), std::max(last - 1, 0));
    const double f = last == 0 ? 0.0 : pos - k;
    const Rgb& a = palette[k];
    const Rgb& b = palette[std::min(k + 1, last)];
    for (int c = 0; c < 3; ++c) truth[i][c] = QuantizeChannel(a[c] + (b[c] - a[c]) * f);
  }
  return truth;
}

struct Stroke {
  double x;
  double y;
  double heading;
};

// Random-walk polylines stamped with a round brush. Drawing stops at the
// exact pixel that reaches the coverage target.
class StrokePainter {
 public:
  StrokePainter(const SynthSpec& spec, SplitMix64& rng, Raster& canvas, Mask& mask)
      : spec_(spec), rng_(rng), canvas_(canvas), mask_(mask) {
    target_ = static_cast<size_t>(
        std::llround(spec.coverage_target * static_cast<double>(mask.size())));
    target_ = std::max<size_t>(target_, 1);
  }

  void Paint() {
    std::vector<Stroke> strokes;
    for (int i = 0; i < spec_.stroke_count; ++i) {
      strokes.push_back(Stroke{rng_.NextDouble() * (spec_.width - 1),
                               rng_.NextDouble() * (spec_.height - 1),
                               rng_.NextDouble() * 2.0 * std::numbers::pi});
    }
    long segments = 0;
    while (covered_ < target_) {
      for (Stroke& s : strokes) {
        if (covered_ >= target_) break;
        AdvanceSegment(s);
      }
      if (++segments > kMaxStrokeSegments) {
        throw Error(ErrorCode::kInternal, "stroke painter failed to reach coverage target");
      }
    }
  }

 private:
  void AdvanceSegment(Stroke& s) {
    s.heading += (rng_.NextDouble() - 0.5) * 1.6;
    const int length = rng_.NextInt(2, 6);
    for (int step = 0; step < length && covered_ < target_; ++step) {
      double nx = s.x + std::cos(s.heading);
      double ny = s.y + std::sin(s.heading);
      if (nx < 0.0 || ny < 0.0 || nx > spec_.width - 1 || ny > spec_.height - 1) {
        s.heading += std::numbers::pi;
        nx = std::clamp(nx, 0.0, static_cast<double>(spec_.width - 1));
        ny = std::clamp(ny, 0.0, static_cast<double>(spec_.height - 1));
      }
      s.x = nx;
      s.y = ny;
      Stamp(s.x, s.y);
    }
  }

  void Stamp(double cx, double cy) {
    const double radius = spec_.stroke_width / 2.0;
    const int x0 = std::max(0, static_cast<int>(std::floor(cx - radius)));
    const int x1 = std::min(spec_.width - 1, static_cast<int>(std::ceil(cx + radius)));
    const int y0 = std::max(0, static_cast<int>(std::floor(cy - radius)));
    const int y1 = std::min(spec_.height - 1, static_cast<int>(std::ceil(cy + radius)));
    const int rx = static_cast<int>(std::lround(cx));
    const int ry = static_cast<int>(std::lround(cy));
    for (int y = y0; y <= y1; ++y) {
      for (int x = x0; x <= x1; ++x) {
        if (covered_ >= target_) return;
        const double dx = x - cx;
        const double dy = y - cy;
        const bool inside = dx * dx + dy * dy <= radius * radius || (x == rx && y == ry);
        if (!inside || mask_.at(x, y)) continue;
        mask_.set(x, y, true);
        Rgb& px = canvas_.at(x, y);
        for (int c = 0; c < 3; ++c) {
          px[c] = static_cast<uint8_t>(rng_.NextInt(0, spec_.stroke_darkness));
        }
        ++covered_;
      }
    }
  }

  const SynthSpec& spec_;
  SplitMix64& rng_;
  Raster& canvas_;
  Mask& mask_;
  size_t target_ = 0;
  size_t covered_ = 0;
};

Rgb ParseRgb(const json& v) {
  if (!v.is_array() || v.size() != 3) {
    throw Error(ErrorCode::kInvalidSpec, "palette entries must be [r,g,b]");
  }
  Rgb out;
  for (int c = 0; c < 3; ++c) {
    if (!v[c].is_number_integer() || v[c].get<int>() < 0 || v[c].get<int>() > 255) {
      throw Error(ErrorCode::kInvalidSpec, "palette channels must be integers in [0,255]");
    }
    out[c] = static_cast<uint8_t>(v[c].get<int>());
  }
  return out;
}

}  // namespace

void SynthSpec::Validate() const {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::kInvalidSpec, msg); };
  if (width < 1 || height < 1 || width > kMaxSynthDimension || height > kMaxSynthDimension) {
    fail("synth dimensions must be in [1," + std::to_string(kMaxSynthDimension) + "]");
  }
  if (chalk_palette.empty()) fail("chalk_palette must not be empty");
  if (stroke_count < 0) fail("stroke_count must be non-negative");
  if (stroke_darkness < 0 || stroke_darkness > 90) fail("stroke_darkness must be in [0,90]");
  if (stroke_width < 1) fail("stroke_width must be at least 1");
  if (!(coverage_target > 0.0 && coverage_target <= 0.5)) {
    fail("coverage_target must be in (0,0.5]");
  }
}

SynthCase Generate(const SynthSpec& spec) {
  spec.Validate();
  SplitMix64 rng(spec.seed);
  Raster truth = ChalkField(spec, rng);
  Raster degraded = truth;
  Mask mask(spec.width, spec.height);
  if (spec.stroke_count > 0) StrokePainter(spec, rng, degraded, mask).Paint();
  return SynthCase{std::move(truth), std::move(degraded), std::move(mask), spec};
}

int KnownGoodThreshold(const SynthSpec& spec) {
  spec.Validate();
  int darkest = LumaMilli(spec.chalk_palette.front());
  for (const Rgb& c : spec.chalk_palette) darkest = std::min(darkest, LumaMilli(c));
  // Quantizing an interpolated color moves each channel by at most 0.5, so
  // the luma of any chalk pixel is at least darkest - 500 (milli-units).
  const int chalk_floor = darkest - 500;
  const int ink_ceiling = 1000 * spec.stroke_darkness;
  const int threshold = (ink_ceiling + chalk_floor) / 2000;
  if (!(ink_ceiling < 1000 * threshold && 1000 * threshold <= chalk_floor)) {
    throw Error(ErrorCode::kInvalidSpec, "palette is too dark to separate from the ink");
  }
  return threshold;
}

SynthEvaluation Evaluate(const SynthCase& c, const Raster& restored) {
  if (!restored.SameShape(c.truth)) {
    throw Error(ErrorCode::kDimensionMismatch, "restored image size differs from the case");
  }
  return SynthEvaluation{Psnr(c.truth, restored), Psnr(c.truth, c.degraded),
                         MeanAbsErrorOnMask(c.truth, restored, c.text_mask)};
}

std::vector<SynthSpec> FrozenCorpus() {
  std::vector<SynthSpec> corpus;
  for (int i = 0; i < 10; ++i) {
    SynthSpec spec;
    spec.seed = 1000 + static_cast<uint64_t>(i);
    spec.coverage_target = 0.10 + 0.20 * i / 9.0;
    corpus.push_back(spec);
  }
  return corpus;
}

std::string SynthSpecToJson(const SynthSpec& spec) {
  json palette = json::array();
  for (const Rgb& c : spec.chalk_palette) palette.push_back({c.r, c.g, c.b});
  json doc{{"width", spec.width},
           {"height", spec.height},
           {"seed", spec.seed},
           {"chalk_palette", palette},
           {"stroke_count", spec.stroke_count},
           {"stroke_darkness", spec.stroke_darkness},
           {"stroke_width", spec.stroke_width},
           {"coverage_target", spec.coverage_target}};
  return doc.dump(2);
}

SynthSpec SynthSpecFromJson(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidSpec, std::string("synth spec: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::kInvalidSpec, "synth spec must be an object");
  SynthSpec spec;
  try {
    spec.width = doc.value("width", spec.width);
    spec.height = doc.value("height", spec.height);
    spec.seed = doc.value("seed", spec.seed);
    spec.stroke_count = doc.value("stroke_count", spec.stroke_count);
    spec.stroke_darkness = doc.value("stroke_darkness", spec.stroke_darkness);
    spec.stroke_width = doc.value("stroke_width", spec.stroke_width);
    spec.coverage_target = doc.value("coverage_target", spec.coverage_target);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidSpec, std::string("synth spec: ") + e.what());
  }
  if (doc.contains("chalk_palette")) {
    const json& p = doc.at("chalk_palette");
    if (!p.is_array()) throw Error(ErrorCode::kInvalidSpec, "chalk_palette must be a list");
    spec.chalk_palette.clear();
    for (const json& entry : p) spec.chalk_palette.push_back(ParseRgb(entry));
  }
  spec.Validate();
  return spec;
}

SynthSpec LoadSynthSpec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kNotFound, "cannot open synth spec " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return SynthSpecFromJson(ss.str());
}

void SaveSynthCase(const SynthCase& c, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create " + dir.string() + ": " + ec.message());
  SaveImage(c.truth, dir / "truth.png");
  SaveImage(c.degraded, dir / "degraded.png");
  SaveMask(c.text_mask, dir / "mask.png");
  json doc = json::parse(SynthSpecToJson(c.spec));
  try {
    doc["known_good_threshold"] = KnownGoodThreshold(c.spec);
  } catch (const Error&) {
    // Not separable; nothing to suggest.
  }
  std::ofstream out(dir / "spec.json");
  out << doc.dump(2) << "\n";
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + (dir / "spec.json").string());
}

std::string EvaluationToJson(const SynthEvaluation& e) {
  json doc{{"psnr_db", PsnrJson(e.psnr_db)},
           {"psnr_degraded_db", PsnrJson(e.psnr_degraded_db)},
           {"mae_on_mask", e.mae_on_mask}};
  return doc.dump(2);
}

}  // namespace sketchrestore
