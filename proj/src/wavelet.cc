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


#include "sketchrestore/wavelet.h"

#include <array>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "sketchrestore/error.h"

namespace sketchrestore {
namespace {

constexpr std::array<double, 5> kB3Taps = {1.0 / 16, 4.0 / 16, 6.0 / 16, 4.0 / 16, 1.0 / 16};

void CheckLevels(int levels) {
  if (levels < 1) {
    throw Error(ErrorCode::kInvalidLevels,
                "wavelet levels must be at least 1, got " + std::to_string(levels));
  }
  // 2^(levels-1) must stay representable as a tap spacing.
  if (levels > 24) {
    throw Error(ErrorCode::kInvalidLevels, "wavelet levels must not exceed 24");
  }
}

}  // namespace

int ReflectIndex(int i, int n) {
  if (n == 1) return 0;
  const int period = 2 * (n - 1);
  int m = i % period;
  if (m < 0) m += period;
  return m < n ? m : period - m;
}

PlaneF B3Smooth(const PlaneF& plane, int step) {
  const int w = plane.width();
  const int h = plane.height();
  PlaneF rows(w, h);
  for (int y = 0; y < h; ++y) {
    const double* in = plane.Row(y);
    double* out = rows.Row(y);
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int k = 0; k < 5; ++k) acc += kB3Taps[k] * in[ReflectIndex(x + (k - 2) * step, w)];
      out[x] = acc;
    }
  }
  PlaneF out(w, h);
  for (int y = 0; y < h; ++y) {
    std::array<const double*, 5> src;
    for (int k = 0; k < 5; ++k) src[k] = rows.Row(ReflectIndex(y + (k - 2) * step, h));
    double* dst = out.Row(y);
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int k = 0; k < 5; ++k) acc += kB3Taps[k] * src[k][x];
      dst[x] = acc;
    }
  }
  return out;
}

WaveletStack Decompose(const PlaneF& plane, int levels) {
  CheckLevels(levels);
  WaveletStack stack{{}, plane, kB3SplineKernelId};
  stack.details.reserve(static_cast<size_t>(levels));
  PlaneF current = plane;
  for (int j = 1; j <= levels; ++j) {
    PlaneF smooth = B3Smooth(current, 1 << (j - 1));
    PlaneF detail(plane.width(), plane.height());
    for (size_t i = 0; i < detail.size(); ++i) detail[i] = current[i] - smooth[i];
    stack.details.push_back(std::move(detail));
    current = std::move(smooth);
  }
  stack.residual = std::move(current);
  return stack;
}

GainVector GainVector::Parse(const std::string& text, int levels) {
  CheckLevels(levels);
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end == item.c_str() || *end != '\0') {
      throw Error(ErrorCode::kInvalidArgument, "malformed gain '" + item + "'");
    }
    values.push_back(v);
  }
  GainVector gains;
  if (values.size() == static_cast<size_t>(levels) + 1) {
    gains.residual_gain = values.back();
    values.pop_back();
  } else if (values.size() != static_cast<size_t>(levels)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(levels) + " or " + std::to_string(levels + 1) +
                    " gains, got " + std::to_string(values.size()));
  }
  gains.gains = std::move(values);
  gains.Validate(levels);
  return gains;
}

void GainVector::Validate(int levels) const {
  if (gains.size() != static_cast<size_t>(levels)) {
    throw Error(ErrorCode::kDimensionMismatch, "gain count does not match wavelet levels");
  }
  for (double g : gains) {
    if (!std::isfinite(g) || g < 0.0) {
      throw Error(ErrorCode::kInvalidArgument, "gains must be finite and non-negative");
    }
  }
  if (!std::isfinite(residual_gain) || residual_gain < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "residual gain must be finite and non-negative");
  }
}

PlaneF Reconstruct(const WaveletStack& stack, const GainVector& gains) {
  gains.Validate(stack.levels());
  PlaneF out(stack.residual.width(), stack.residual.height());
  for (const PlaneF& d : stack.details) {
    if (!d.SameShape(out)) throw Error(ErrorCode::kDimensionMismatch, "ragged wavelet stack");
  }
  for (size_t i = 0; i < out.size(); ++i) {
    double acc = gains.residual_gain * stack.residual[i];
    for (int j = 0; j < stack.levels(); ++j) acc += gains.gains[j] * stack.details[j][i];
    out[i] = acc;
  }
  return out;
}

Raster WaveletFilterRgb(const Raster& raster, int levels, const GainVector& gains) {
  CheckLevels(levels);
  gains.Validate(levels);
  std::array<PlaneF, 3> planes = ToPlanes(raster);
  for (PlaneF& plane : planes) plane = Reconstruct(Decompose(plane, levels), gains);
  return FromPlanes(planes);
}

}  // namespace sketchrestore
