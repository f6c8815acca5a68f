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


#include "sketchrestore/metrics.h"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "sketchrestore/error.h"

namespace sketchrestore {

double MeanSquaredError(const Raster& a, const Raster& b) {
  if (!a.SameShape(b)) throw Error(ErrorCode::kDimensionMismatch, "metric inputs differ in size");
  double total = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    for (int c = 0; c < 3; ++c) {
      const double d = static_cast<double>(a[i][c]) - static_cast<double>(b[i][c]);
      total += d * d;
    }
  }
  return total / (3.0 * static_cast<double>(a.size()));
}

double Psnr(const Raster& a, const Raster& b) {
  const double mse = MeanSquaredError(a, b);
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double MeanAbsErrorOnMask(const Raster& a, const Raster& b, const Mask& mask) {
  if (!a.SameShape(b) || !mask.Matches(a)) {
    throw Error(ErrorCode::kDimensionMismatch, "metric inputs differ in size");
  }
  long total = 0;
  size_t count = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (!mask[i]) continue;
    for (int c = 0; c < 3; ++c) total += std::abs(int{a[i][c]} - int{b[i][c]});
    ++count;
  }
  return count == 0 ? 0.0 : static_cast<double>(total) / (3.0 * static_cast<double>(count));
}

double MeanAbsLaplacian(const Raster& raster) {
  const int w = raster.width();
  const int h = raster.height();
  if (w < 3 || h < 3) return 0.0;
  double total = 0.0;
  for (int y = 1; y < h - 1; ++y) {
    for (int x = 1; x < w - 1; ++x) {
      for (int c = 0; c < 3; ++c) {
        const int lap = raster.at(x - 1, y)[c] + raster.at(x + 1, y)[c] +
                        raster.at(x, y - 1)[c] + raster.at(x, y + 1)[c] -
                        4 * raster.at(x, y)[c];
        total += std::abs(lap);
      }
    }
  }
  return total / (3.0 * (w - 2) * (h - 2));
}

}  // namespace sketchrestore
