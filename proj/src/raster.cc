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


#include "sketchrestore/raster.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "sketchrestore/error.h"

namespace sketchrestore {
namespace {

size_t CheckedArea(int width, int height) {
  if (width < 1 || height < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "image dimensions must be at least 1x1, got " +
                    std::to_string(width) + "x" + std::to_string(height));
  }
  return static_cast<size_t>(width) * static_cast<size_t>(height);
}

}  // namespace

Raster::Raster(int width, int height, Rgb fill)
    : width_(width), height_(height), pixels_(CheckedArea(width, height), fill) {}

Raster::Raster(int width, int height, std::vector<Rgb> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (pixels_.size() != CheckedArea(width, height)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "pixel count does not match width*height");
  }
}

Mask::Mask(int width, int height, bool fill)
    : width_(width),
      height_(height),
      bits_(CheckedArea(width, height), fill ? 1 : 0) {}

size_t Mask::Count() const {
  return static_cast<size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

PlaneF::PlaneF(int width, int height, double fill)
    : width_(width), height_(height), values_(CheckedArea(width, height), fill) {}

PlaneF::PlaneF(int width, int height, std::vector<double> values)
    : width_(width), height_(height), values_(std::move(values)) {
  if (values_.size() != CheckedArea(width, height)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "value count does not match width*height");
  }
}

uint8_t QuantizeChannel(double v) {
  // std::round rounds halfway cases away from zero.
  const double rounded = std::round(v);
  return static_cast<uint8_t>(std::clamp(rounded, 0.0, 255.0));
}

std::array<PlaneF, 3> ToPlanes(const Raster& raster) {
  std::array<PlaneF, 3> planes{PlaneF(raster.width(), raster.height()),
                               PlaneF(raster.width(), raster.height()),
                               PlaneF(raster.width(), raster.height())};
  for (size_t i = 0; i < raster.size(); ++i) {
    for (int c = 0; c < 3; ++c) planes[c][i] = raster[i][c];
  }
  return planes;
}

Raster FromPlanes(const PlaneF& r, const PlaneF& g, const PlaneF& b) {
  if (!r.SameShape(g) || !r.SameShape(b)) {
    throw Error(ErrorCode::kDimensionMismatch, "planes differ in size");
  }
  Raster out(r.width(), r.height());
  const PlaneF* planes[3] = {&r, &g, &b};
  for (size_t i = 0; i < out.size(); ++i) {
    for (int c = 0; c < 3; ++c) {
      const double v = (*planes[c])[i];
      if (!std::isfinite(v)) {
        throw Error(ErrorCode::kInvalidArgument, "plane holds a non-finite value");
      }
      out[i][c] = QuantizeChannel(v);
    }
  }
  return out;
}

}  // namespace sketchrestore
