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


#ifndef SKETCHRESTORE_INPAINT_H_
#define SKETCHRESTORE_INPAINT_H_

#include <cstddef>
#include <string>

#include "sketchrestore/masking.h"
#include "sketchrestore/raster.h"

namespace sketchrestore {

enum class ResidualPolicy { kLeave, kFillNearest };

const char* ResidualPolicyName(ResidualPolicy policy);
ResidualPolicy ParseResidualPolicy(const std::string& name);

// Neighborhood is always the 8-connected one.
struct InpaintConfig {
  int min_neighbors = 3;
  int max_iterations = 10000;
  ResidualPolicy residual_policy = ResidualPolicy::kLeave;

  void Validate() const;

  friend bool operator==(const InpaintConfig&, const InpaintConfig&) = default;
};

struct InpaintReport {
  int iterations_run = 0;
  // Includes pixels assigned by the residual policy.
  size_t filled_count = 0;
  size_t remaining_masked = 0;
  // Subset of filled_count assigned by fill-nearest.
  size_t residual_filled = 0;
};

struct InpaintResult {
  Raster image;
  // Pixels still unfilled at termination.
  Mask residual;
  InpaintReport report;
};

// Iterative neighbor-averaging fill.
//
// Each iteration is synchronous: eligibility and source values come from the
// state at the start of the iteration. A masked pixel with at least
// `min_neighbors` unmasked 8-neighbors takes the per-channel mean of all of
// them (rounded half away from zero) and counts as unmasked from the next
// iteration on. The loop ends when an iteration fills nothing, when nothing
// is left to fill, or after `max_iterations`. Unmasked input pixels are never
// modified.
InpaintResult Inpaint(const Raster& raster, const Mask& mask, const InpaintConfig& config);

struct RestoreResult {
  Raster image;
  Mask mask;
  Mask residual;
  InpaintReport report;
};

// BuildMask followed by Inpaint.
RestoreResult Restore(const Raster& raster, const ThresholdSpec& spec,
                      const InpaintConfig& config);

}  // namespace sketchrestore

#endif  // SKETCHRESTORE_INPAINT_H_
