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


#include <doctest.h>

#include <queue>
#include <random>

#include "oracles.h"
#include "sketchrestore/error.h"
#include "sketchrestore/inpaint.h"
#include "test_util.h"

namespace sketchrestore {
namespace {

// 3x3 with the center masked; `neighbors` lists (x, y, value) of the
// unmasked ring pixels, all other ring pixels are masked.
struct CenterCase {
  Raster image{3, 3};
  Mask mask{3, 3, true};
};

CenterCase MakeCenter(std::initializer_list<std::tuple<int, int, Rgb>> neighbors) {
  CenterCase c;
  for (const auto& [x, y, v] : neighbors) {
    c.image.at(x, y) = v;
    c.mask.set(x, y, false);
  }
  return c;
}

TEST_CASE("center with eight identical neighbors") {
  Raster image(3, 3, Rgb{100, 0, 0});
  image.at(1, 1) = Rgb{0, 0, 0};
  Mask mask(3, 3);
  mask.set(1, 1, true);
  const InpaintResult res = Inpaint(image, mask, {});
  CHECK(res.image.at(1, 1) == Rgb{100, 0, 0});
  CHECK(res.report.iterations_run == 1);
  CHECK(res.report.filled_count == 1);
  CHECK(res.report.remaining_masked == 0);
}

TEST_CASE("exactly three unmasked neighbors average to their mean") {
  CenterCase c = MakeCenter({{0, 0, Rgb{10, 0, 0}}, {1, 0, Rgb{20, 0, 0}}, {2, 0, Rgb{30, 0, 0}}});
  InpaintConfig config;
  config.max_iterations = 1;
  const InpaintResult res = Inpaint(c.image, c.mask, config);
  CHECK(res.image.at(1, 1) == Rgb{20, 0, 0});
  CHECK(res.report.iterations_run == 1);
}

TEST_CASE("two unmasked neighbors are not enough") {
  CenterCase c = MakeCenter({{0, 0, Rgb{10, 0, 0}}, {2, 2, Rgb{30, 0, 0}}});
  const Raster before = c.image;
  const InpaintResult res = Inpaint(c.image, c.mask, {});
  CHECK(res.image == before);
  CHECK(res.report.filled_count == 0);
  CHECK(res.report.remaining_masked == 7);
  CHECK(res.residual.at(1, 1));
}

TEST_CASE("fill value averages all unmasked neighbors with half-away rounding") {
  CenterCase c = MakeCenter({{0, 0, Rgb{10, 1, 0}}, {1, 0, Rgb{11, 2, 0}}, {2, 0, Rgb{13, 2, 0}},
                             {0, 1, Rgb{12, 2, 1}}});
  InpaintConfig config;
  config.max_iterations = 1;
  const Rgb center = Inpaint(c.image, c.mask, config).image.at(1, 1);
  // (10+11+13+12)/4 = 11.5 -> 12; (1+2+2+2)/4 = 1.75 -> 2; 1/4 -> 0
  CHECK(center == Rgb{12, 2, 0});
  CHECK(center.r == oracle::RoundMean(46, 4));
}

TEST_CASE("1x5 strip fills inward one pixel per side per iteration") {
  // Hand simulation, min_neighbors = 1:
  //   start   [10 . . . 20]
  //   iter 1  [10 10 . 20 20]
  //   iter 2  [10 10 15 20 20]
  Raster image(5, 1);
  image[0] = Rgb{10, 0, 0};
  image[4] = Rgb{20, 0, 0};
  Mask mask(5, 1, true);
  mask.set(0, false);
  mask.set(4, false);
  InpaintConfig config;
  config.min_neighbors = 1;
  const InpaintResult res = Inpaint(image, mask, config);
  CHECK(res.report.iterations_run == 2);
  CHECK(res.report.remaining_masked == 0);
  CHECK(res.image[1] == Rgb{10, 0, 0});
  CHECK(res.image[2] == Rgb{15, 0, 0});
  CHECK(res.image[3] == Rgb{20, 0, 0});

  // Interior strip pixels next to the seeds see a single unmasked neighbor,
  // so min_neighbors = 2 stalls on the first iteration.
  config.min_neighbors = 2;
  const InpaintResult stalled = Inpaint(image, mask, config);
  CHECK(stalled.report.iterations_run == 1);
  CHECK(stalled.report.remaining_masked == 3);
  CHECK(stalled.image == image);
}

TEST_CASE("residual fill-nearest uses the nearest source, ties in row-major order") {
  // Row 0: A . B ; center (1,0) is equidistant from (0,0) and (2,0).
  Raster image(3, 1);
  image[0] = Rgb{1, 1, 1};
  image[2] = Rgb{9, 9, 9};
  Mask mask(3, 1);
  mask.set(1, true);
  InpaintConfig config;
  config.residual_policy = ResidualPolicy::kFillNearest;
  const InpaintResult res = Inpaint(image, mask, config);
  CHECK(res.image[1] == Rgb{1, 1, 1});
  CHECK(res.report.residual_filled == 1);
  CHECK(res.report.filled_count == 1);
  CHECK(res.report.remaining_masked == 0);
}

// Brute force nearest-source fill for comparison.
Raster BruteNearest(const Raster& image, const Mask& open) {
  Raster out = image;
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      if (!open.at(x, y)) continue;
      long best = -1;
      Rgb value;
      for (int yy = 0; yy < image.height(); ++yy) {
        for (int xx = 0; xx < image.width(); ++xx) {
          if (open.at(xx, yy)) continue;
          const long d = static_cast<long>(xx - x) * (xx - x) + static_cast<long>(yy - y) * (yy - y);
          if (best < 0 || d < best) {
            best = d;
            value = image.at(xx, yy);
          }
        }
      }
      if (best >= 0) out.at(x, y) = value;
    }
  }
  return out;
}

TEST_CASE("fill-nearest matches brute force on random stalled masks") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const Raster image = testing::RandomRaster(rng, 11, 8);
    const Mask mask = testing::RandomMask(rng, 11, 8, 0.7);
    InpaintConfig leave;
    leave.min_neighbors = 8;
    const InpaintResult stalled = Inpaint(image, mask, leave);
    InpaintConfig nearest = leave;
    nearest.residual_policy = ResidualPolicy::kFillNearest;
    const InpaintResult filled = Inpaint(image, mask, nearest);
    CHECK(filled.image == BruteNearest(stalled.image, stalled.residual));
  }
}

TEST_CASE("restore on edge inputs") {
  const Raster bright(6, 4, Rgb{200, 180, 170});
  const RestoreResult none = Restore(bright, {50, ChannelRule::kLuma}, {});
  CHECK(none.image == bright);
  CHECK(none.report.iterations_run == 0);
  CHECK(none.mask.Count() == 0);

  const Raster black(6, 4);
  const RestoreResult dark = Restore(black, {1, ChannelRule::kLuma}, {});
  CHECK(dark.mask.Count() == 24);
  CHECK(dark.report.remaining_masked == 24);
  CHECK(dark.report.filled_count == 0);

  InpaintConfig nearest;
  nearest.residual_policy = ResidualPolicy::kFillNearest;
  CHECK(Restore(black, {1, ChannelRule::kLuma}, nearest).report.remaining_masked == 24);
}

TEST_CASE("config validation and dimension checks") {
  InpaintConfig bad;
  bad.min_neighbors = 0;
  CHECK_THROWS_AS(Inpaint(Raster(2, 2), Mask(2, 2), bad), Error);
  bad.min_neighbors = 9;
  CHECK_THROWS_AS(Inpaint(Raster(2, 2), Mask(2, 2), bad), Error);
  bad = InpaintConfig{};
  bad.max_iterations = 0;
  CHECK_THROWS_AS(Inpaint(Raster(2, 2), Mask(2, 2), bad), Error);
  try {
    Inpaint(Raster(2, 2), Mask(3, 2), {});
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDimensionMismatch);
  }
}

// One synchronous step computed independently of the library.
std::pair<Raster, Mask> OracleStep(const Raster& image, const Mask& open, int min_neighbors) {
  Raster next = image;
  Mask next_open = open;
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      if (!open.at(x, y)) continue;
      double sum[3] = {0, 0, 0};
      int n = 0;
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          const int xx = x + dx, yy = y + dy;
          if ((dx == 0 && dy == 0) || xx < 0 || yy < 0 || xx >= image.width() ||
              yy >= image.height() || open.at(xx, yy)) {
            continue;
          }
          for (int c = 0; c < 3; ++c) sum[c] += image.at(xx, yy)[c];
          ++n;
        }
      }
      if (n >= min_neighbors) {
        for (int c = 0; c < 3; ++c) next.at(x, y)[c] = oracle::RoundMean(sum[c], n);
        next_open.set(x, y, false);
      }
    }
  }
  return {next, next_open};
}

TEST_CASE("property: inpaint agrees with a step-by-step oracle") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const int w = 2 + static_cast<int>(rng() % 14);
    const int h = 2 + static_cast<int>(rng() % 14);
    const Raster image = testing::RandomRaster(rng, w, h);
    const Mask mask = testing::RandomMask(rng, w, h, 0.5);
    const int k = 1 + static_cast<int>(rng() % 4);
    InpaintConfig config;
    config.min_neighbors = k;

    Raster expected = image;
    Mask open = mask;
    int iterations = 0;
    while (open.Count() > 0) {
      ++iterations;
      auto [next, next_open] = OracleStep(expected, open, k);
      if (next_open == open) break;
      expected = next;
      open = next_open;
    }
    const InpaintResult res = Inpaint(image, mask, config);
    CHECK(res.image == expected);
    CHECK(res.residual == open);
    CHECK(res.report.iterations_run == iterations);
    CHECK(res.report.filled_count + res.report.remaining_masked == mask.Count());
    CHECK(static_cast<size_t>(res.report.iterations_run) <= mask.Count() + 1);
  }
}

TEST_CASE("property: conservation, determinism and idempotence") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    const Raster image = testing::RandomRaster(rng, 16, 12);
    const Mask mask = testing::RandomMask(rng, 16, 12, 0.35);
    const InpaintResult a = Inpaint(image, mask, {});
    const InpaintResult b = Inpaint(image, mask, {});
    CHECK(a.image == b.image);
    for (size_t i = 0; i < image.size(); ++i) {
      if (!mask[i]) CHECK(a.image[i] == image[i]);
    }
    const InpaintResult again = Inpaint(a.image, a.residual, {});
    CHECK(again.image == a.image);
    CHECK(again.report.filled_count == 0);
  }
}

// Masked pixels 8-connected (through masked pixels) to some unmasked pixel.
Mask ReachableFromSources(const Mask& mask) {
  Mask reach(mask.width(), mask.height());
  std::queue<std::pair<int, int>> frontier;
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) {
      if (!mask.at(x, y)) frontier.emplace(x, y);
    }
  }
  while (!frontier.empty()) {
    const auto [x, y] = frontier.front();
    frontier.pop();
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        const int xx = x + dx, yy = y + dy;
        if (xx < 0 || yy < 0 || xx >= mask.width() || yy >= mask.height()) continue;
        if (mask.at(xx, yy) && !reach.at(xx, yy)) {
          reach.set(xx, yy, true);
          frontier.emplace(xx, yy);
        }
      }
    }
  }
  return reach;
}

TEST_CASE("property: with min_neighbors 1 every reachable blob is filled") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 30; ++trial) {
    const int w = 4 + static_cast<int>(rng() % 20);
    const int h = 4 + static_cast<int>(rng() % 20);
    // Blobs: random discs.
    Mask mask(w, h);
    const int blobs = 1 + static_cast<int>(rng() % 4);
    for (int b = 0; b < blobs; ++b) {
      const int cx = static_cast<int>(rng() % w), cy = static_cast<int>(rng() % h);
      const int r = 1 + static_cast<int>(rng() % 6);
      for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
          if ((x - cx) * (x - cx) + (y - cy) * (y - cy) <= r * r) mask.set(x, y, true);
        }
      }
    }
    InpaintConfig config;
    config.min_neighbors = 1;
    const InpaintResult res = Inpaint(testing::RandomRaster(rng, w, h), mask, config);
    const Mask reach = ReachableFromSources(mask);
    for (size_t i = 0; i < mask.size(); ++i) {
      if (reach[i]) CHECK_FALSE(res.residual[i]);
    }
  }
}

TEST_CASE("masked count never increases between iterations") {
  std::mt19937_64 rng(66);
  const Raster image = testing::RandomRaster(rng, 20, 20);
  const Mask mask = testing::RandomMask(rng, 20, 20, 0.6);
  size_t previous = mask.Count();
  for (int cap = 1; cap <= 12; ++cap) {
    InpaintConfig config;
    config.max_iterations = cap;
    const size_t remaining = Inpaint(image, mask, config).report.remaining_masked;
    CHECK(remaining <= previous);
    previous = remaining;
  }
}

}  // namespace
}  // namespace sketchrestore
