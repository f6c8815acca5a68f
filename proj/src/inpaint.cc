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


#include "sketchrestore/inpaint.h"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <vector>

#include "sketchrestore/error.h"

namespace sketchrestore {
namespace {

constexpr std::array<std::array<int, 2>, 8> kNeighborOffsets = {{
    {-1, -1}, {0, -1}, {1, -1}, {-1, 0}, {1, 0}, {-1, 1}, {0, 1}, {1, 1},
}};

// Mean of non-negative integers, rounded half away from zero.
uint8_t RoundedMean(int sum, int count) {
  return static_cast<uint8_t>((2 * sum + count) / (2 * count));
}

struct PendingFill {
  size_t index;
  Rgb value;
};

// Assigns every still-masked pixel the value of the nearest unmasked pixel
// (squared Euclidean distance; ties go to the earliest candidate in
// row-major order). Candidates at Chebyshev ring r are at least r away, so
// the ring search stops once r*r exceeds the best distance found.
size_t FillNearest(Raster& image, Mask& open) {
  const int w = image.width();
  const int h = image.height();
  const Mask sources = open;
  if (sources.Count() == sources.size()) return 0;

  std::vector<std::pair<size_t, size_t>> assignments;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!sources.at(x, y)) continue;
      long best_d2 = std::numeric_limits<long>::max();
      size_t best_index = 0;
      const int max_r = std::max(w, h);
      for (int r = 1; r <= max_r; ++r) {
        if (static_cast<long>(r) * r > best_d2) break;
        for (int dy = -r; dy <= r; ++dy) {
          const int yy = y + dy;
          if (yy < 0 || yy >= h) continue;
          const bool edge_row = dy == -r || dy == r;
          for (int dx = -r; dx <= r; dx += edge_row ? 1 : 2 * r) {
            const int xx = x + dx;
            if (xx < 0 || xx >= w || sources.at(xx, yy)) continue;
            const long d2 = static_cast<long>(dx) * dx + static_cast<long>(dy) * dy;
            const size_t index = static_cast<size_t>(yy) * w + xx;
            if (d2 < best_d2 || (d2 == best_d2 && index < best_index)) {
              best_d2 = d2;
              best_index = index;
            }
          }
        }
      }
      assignments.emplace_back(static_cast<size_t>(y) * w + x, best_index);
    }
  }
  for (const auto& [target, source] : assignments) {
    image[target] = image[source];
    open.set(target, false);
  }
  return assignments.size();
}

}  // namespace

const char* ResidualPolicyName(ResidualPolicy policy) {
  return policy == ResidualPolicy::kLeave ? "leave" : "fill-nearest";
}

ResidualPolicy ParseResidualPolicy(const std::string& name) {
  if (name == "leave") return ResidualPolicy::kLeave;
  if (name == "fill-nearest") return ResidualPolicy::kFillNearest;
  throw Error(ErrorCode::kInvalidArgument, "unknown residual policy '" + name + "'");
}

void InpaintConfig::Validate() const {
  if (min_neighbors < 1 || min_neighbors > 8) {
    throw Error(ErrorCode::kInvalidArgument, "min_neighbors must be in [1,8]");
  }
  if (max_iterations < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_iterations must be at least 1");
  }
}

InpaintResult Inpaint(const Raster& raster, const Mask& mask, const InpaintConfig& config) {
  config.Validate();
  if (!mask.Matches(raster)) {
    throw Error(ErrorCode::kDimensionMismatch, "mask and image sizes differ");
  }
  const int w = raster.width();
  const int h = raster.height();
  InpaintResult result{raster, mask, InpaintReport{}};
  Raster& image = result.image;
  Mask& open = result.residual;
  size_t remaining = open.Count();

  std::vector<PendingFill> pending;
  while (remaining > 0 && result.report.iterations_run < config.max_iterations) {
    ++result.report.iterations_run;
    pending.clear();
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        if (!open.at(x, y)) continue;
        int count = 0;
        std::array<int, 3> sum = {0, 0, 0};
        for (const auto& [dx, dy] : kNeighborOffsets) {
          const int xx = x + dx;
          const int yy = y + dy;
          if (xx < 0 || yy < 0 || xx >= w || yy >= h || open.at(xx, yy)) continue;
          const Rgb& px = image.at(xx, yy);
          sum[0] += px.r;
          sum[1] += px.g;
          sum[2] += px.b;
          ++count;
        }
        if (count >= config.min_neighbors) {
          pending.push_back({static_cast<size_t>(y) * w + x,
                             Rgb{RoundedMean(sum[0], count), RoundedMean(sum[1], count),
                                 RoundedMean(sum[2], count)}});
        }
      }
    }
    if (pending.empty()) break;
    for (const PendingFill& fill : pending) {
      image[fill.index] = fill.value;
      open.set(fill.index, false);
    }
    result.report.filled_count += pending.size();
    remaining -= pending.size();
  }

  if (remaining > 0 && config.residual_policy == ResidualPolicy::kFillNearest) {
    const size_t filled = FillNearest(image, open);
    result.report.residual_filled = filled;
    result.report.filled_count += filled;
    remaining -= filled;
  }
  result.report.remaining_masked = remaining;
  return result;
}

RestoreResult Restore(const Raster& raster, const ThresholdSpec& spec,
                      const InpaintConfig& config) {
  Mask mask = BuildMask(raster, spec);
  InpaintResult inpainted = Inpaint(raster, mask, config);
  return RestoreResult{std::move(inpainted.image), std::move(mask),
                       std::move(inpainted.residual), inpainted.report};
}

}  // namespace sketchrestore
