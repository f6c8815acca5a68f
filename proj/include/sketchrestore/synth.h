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


#ifndef SKETCHRESTORE_SYNTH_H_
#define SKETCHRESTORE_SYNTH_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "sketchrestore/raster.h"

namespace sketchrestore {

// SplitMix64 (Steele, Lea, Flood 2014). The constants below are frozen:
// changing any of them changes every generated case.
class SplitMix64 {
 public:
  static constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ull;
  static constexpr uint64_t kMul1 = 0xBF58476D1CE4E5B9ull;
  static constexpr uint64_t kMul2 = 0x94D049BB133111EBull;

  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t Next() {
    uint64_t z = (state_ += kGamma);
    z = (z ^ (z >> 30)) * kMul1;
    z = (z ^ (z >> 27)) * kMul2;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1) from the top 53 bits.
  double NextDouble() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [lo, hi].
  int NextInt(int lo, int hi) {
    const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(Next() % span);
  }

 private:
  uint64_t state_;
};

struct SynthSpec {
  int width = 128;
  int height = 128;
  uint64_t seed = 1;
  // Ordered light to dark; the smooth field is mapped piecewise-linearly
  // across the entries.
  std::vector<Rgb> chalk_palette = {{235, 215, 195}, {210, 140, 115}, {180, 80, 60}};
  int stroke_count = 6;
  int stroke_darkness = 40;
  int stroke_width = 3;
  double coverage_target = 0.2;

  void Validate() const;
};

struct SynthCase {
  Raster truth;
  Raster degraded;
  Mask text_mask;
  SynthSpec spec;
};

SynthCase Generate(const SynthSpec& spec);

// Threshold that separates the ink from the chalk for this spec under the
// luma rule: every ink pixel is strictly below it, every chalk pixel is not.
// Throws kInvalidSpec when the palette is too dark to be separable.
int KnownGoodThreshold(const SynthSpec& spec);

struct SynthEvaluation {
  double psnr_db = 0.0;
  double psnr_degraded_db = 0.0;
  double mae_on_mask = 0.0;
};

SynthEvaluation Evaluate(const SynthCase& c, const Raster& restored);

// Ten seeded cases, 128x128, coverage stepping evenly from 0.10 to 0.30.
std::vector<SynthSpec> FrozenCorpus();

std::string SynthSpecToJson(const SynthSpec& spec);
SynthSpec SynthSpecFromJson(const std::string& text);
SynthSpec LoadSynthSpec(const std::filesystem::path& path);

// Writes truth.png, degraded.png, mask.png and spec.json into `dir`.
void SaveSynthCase(const SynthCase& c, const std::filesystem::path& dir);

// PSNR values as JSON; infinity is encoded as the string "inf".
std::string EvaluationToJson(const SynthEvaluation& e);

}  // namespace sketchrestore

#endif  // SKETCHRESTORE_SYNTH_H_
