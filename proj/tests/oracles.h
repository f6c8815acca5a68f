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


#ifndef SKETCHRESTORE_TESTS_ORACLES_H_
#define SKETCHRESTORE_TESTS_ORACLES_H_

// Reference computations that share no code with the library. They favor
// directness over speed.

#include <cmath>
#include <vector>

#include "sketchrestore/raster.h"

namespace sketchrestore::oracle {

// abcb reflection by repeated single folds.
inline int Reflect(int i, int n) {
  if (n == 1) return 0;
  while (i < 0 || i >= n) {
    if (i < 0) i = -i;
    if (i >= n) i = 2 * (n - 1) - i;
  }
  return i;
}

// Non-separable 5x5 B3-spline convolution with taps `step` apart.
inline PlaneF Smooth2D(const PlaneF& in, int step) {
  const double k[5] = {1, 4, 6, 4, 1};
  PlaneF out(in.width(), in.height());
  for (int y = 0; y < in.height(); ++y) {
    for (int x = 0; x < in.width(); ++x) {
      double acc = 0.0;
      for (int j = 0; j < 5; ++j) {
        for (int i = 0; i < 5; ++i) {
          const int sx = Reflect(x + (i - 2) * step, in.width());
          const int sy = Reflect(y + (j - 2) * step, in.height());
          acc += k[i] * k[j] / 256.0 * in.at(sx, sy);
        }
      }
      out.at(x, y) = acc;
    }
  }
  return out;
}

// details followed by the residual.
inline std::vector<PlaneF> StarletPlanes(const PlaneF& in, int levels) {
  std::vector<PlaneF> planes;
  PlaneF current = in;
  for (int j = 1; j <= levels; ++j) {
    PlaneF next = Smooth2D(current, 1 << (j - 1));
    PlaneF detail(in.width(), in.height());
    for (size_t i = 0; i < detail.size(); ++i) detail[i] = current[i] - next[i];
    planes.push_back(detail);
    current = next;
  }
  planes.push_back(current);
  return planes;
}

// Mean of the given channel values rounded half away from zero, in floating
// point.
inline uint8_t RoundMean(double sum, int count) {
  return static_cast<uint8_t>(std::floor(sum / count + 0.5));
}

}  // namespace sketchrestore::oracle

#endif  // SKETCHRESTORE_TESTS_ORACLES_H_
