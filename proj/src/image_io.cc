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


#include "sketchrestore/image_io.h"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>

#include "sketchrestore/error.h"

namespace sketchrestore {
namespace {

constexpr uint8_t kPngSignature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
constexpr int kMaxDimension = 1 << 16;

std::vector<uint8_t> ReadFile(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw Error(ErrorCode::kNotFound, "no such file: " + path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::kIoError, "read failed: " + path.string());
  return bytes;
}

void WriteFile(const std::filesystem::path& path, std::span<const uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open for writing: " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + path.string());
}

bool IsPng(std::span<const uint8_t> bytes) {
  return bytes.size() >= 8 && std::equal(bytes.begin(), bytes.begin() + 8, kPngSignature);
}

bool IsPpm(std::span<const uint8_t> bytes) {
  return bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '6';
}

// ---------------------------------------------------------------------------
// PPM

class PpmHeaderReader {
 public:
  explicit PpmHeaderReader(std::span<const uint8_t> bytes) : bytes_(bytes) {}

  // Parses one decimal header field, skipping whitespace and # comments.
  long Next() {
    SkipSeparators();
    if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
      throw Error(ErrorCode::kCorruptFile, "truncated or malformed PPM header");
    }
    long v = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      v = v * 10 + (bytes_[pos_++] - '0');
      if (v > 1000000) throw Error(ErrorCode::kCorruptFile, "PPM header value too large");
    }
    return v;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  size_t DataOffset() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw Error(ErrorCode::kCorruptFile, "truncated PPM header");
    }
    return pos_ + 1;
  }

  void Skip(size_t n) { pos_ += n; }

 private:
  void SkipSeparators() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const uint8_t> bytes_;
  size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// PNG. libpng reports errors by longjmp; all state that must survive the jump
// lives on the heap and the frames containing setjmp hold no objects with
// non-trivial destructors.

struct PngReadState {
  std::span<const uint8_t> input;
  size_t offset = 0;
  char message[256] = {0};
  bool had_alpha = false;
  std::vector<uint8_t> pixels;
  std::vector<png_bytep> rows;
};

void PngErrorFn(png_structp png, png_const_charp msg) {
  auto* message = static_cast<char*>(png_get_error_ptr(png));
  std::snprintf(message, 256, "%s", msg);
  png_longjmp(png, 1);
}

void PngWarningFn(png_structp, png_const_charp) {}

void PngReadFn(png_structp png, png_bytep out, png_size_t length) {
  auto* state = static_cast<PngReadState*>(png_get_io_ptr(png));
  if (state->input.size() - state->offset < length) {
    png_error(png, "unexpected end of PNG data");
  }
  std::memcpy(out, state->input.data() + state->offset, length);
  state->offset += length;
}

uint32_t ReadBe32(const uint8_t* p) {
  return (uint32_t{p[0]} << 24) | (uint32_t{p[1]} << 16) | (uint32_t{p[2]} << 8) |
         uint32_t{p[3]};
}

// Returns false and fills state->message on a libpng error.
bool RunPngDecode(PngReadState* state, png_uint_32 width, png_uint_32 height) {
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, state->message,
                                           PngErrorFn, PngWarningFn);
  if (png == nullptr) {
    std::snprintf(state->message, sizeof(state->message), "png_create_read_struct failed");
    return false;
  }
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    std::snprintf(state->message, sizeof(state->message), "png_create_info_struct failed");
    return false;
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    return false;
  }
  png_set_read_fn(png, state, PngReadFn);
  png_read_info(png, info);
  if (png_get_image_width(png, info) != width || png_get_image_height(png, info) != height) {
    png_error(png, "IHDR mismatch");
  }
  const int color_type = png_get_color_type(png, info);
  const int bit_depth = png_get_bit_depth(png, info);
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) {
    png_set_expand_gray_1_2_4_to_8(png);
  }
  if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA) {
    png_set_gray_to_rgb(png);
  }
  if ((color_type & PNG_COLOR_MASK_ALPHA) != 0 ||
      (color_type == PNG_COLOR_TYPE_PALETTE && png_get_valid(png, info, PNG_INFO_tRNS))) {
    state->had_alpha = true;
  }
  png_set_strip_alpha(png);
  png_set_interlace_handling(png);
  png_read_update_info(png, info);
  if (png_get_channels(png, info) != 3 || png_get_bit_depth(png, info) != 8 ||
      png_get_rowbytes(png, info) != static_cast<png_size_t>(width) * 3) {
    png_error(png, "unexpected row layout after transforms");
  }
  png_read_image(png, state->rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return true;
}

struct PngWriteState {
  std::vector<uint8_t> output;
  char message[256] = {0};
};

void PngWriteFn(png_structp png, png_bytep data, png_size_t length) {
  auto* state = static_cast<PngWriteState*>(png_get_io_ptr(png));
  state->output.insert(state->output.end(), data, data + length);
}

void PngFlushFn(png_structp) {}

bool RunPngEncode(PngWriteState* state, int width, int height, int bit_depth,
                  int color_type, png_bytepp rows) {
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, state->message,
                                            PngErrorFn, PngWarningFn);
  if (png == nullptr) return false;
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_write_struct(&png, nullptr);
    return false;
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    return false;
  }
  png_set_write_fn(png, state, PngWriteFn, PngFlushFn);
  png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height),
               bit_depth, color_type, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, rows);
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return true;
}

std::vector<uint8_t> EncodePngRows(int width, int height, int bit_depth, int color_type,
                                   std::vector<uint8_t>& data, size_t row_bytes) {
  std::vector<png_bytep> rows(static_cast<size_t>(height));
  for (int y = 0; y < height; ++y) rows[y] = data.data() + static_cast<size_t>(y) * row_bytes;
  auto state = std::make_unique<PngWriteState>();
  if (!RunPngEncode(state.get(), width, height, bit_depth, color_type, rows.data())) {
    throw Error(ErrorCode::kIoError, std::string("PNG encode failed: ") + state->message);
  }
  return std::move(state->output);
}

std::string LowerExtension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return ext;
}

}  // namespace

bool HasPpmExtension(const std::filesystem::path& path) {
  const std::string ext = LowerExtension(path);
  return ext == ".ppm" || ext == ".pnm";
}

Raster DecodePpm(std::span<const uint8_t> bytes) {
  if (!IsPpm(bytes)) throw Error(ErrorCode::kUnsupportedFormat, "not a binary PPM (P6)");
  PpmHeaderReader reader(bytes);
  reader.Skip(2);
  const long width = reader.Next();
  const long height = reader.Next();
  const long maxval = reader.Next();
  const size_t offset = reader.DataOffset();
  if (width < 1 || height < 1 || width > kMaxDimension || height > kMaxDimension) {
    throw Error(ErrorCode::kCorruptFile, "invalid PPM dimensions");
  }
  if (maxval != 255) {
    throw Error(ErrorCode::kUnsupportedFormat,
                "only maxval 255 PPM is supported, got " + std::to_string(maxval));
  }
  const size_t count = static_cast<size_t>(width) * static_cast<size_t>(height);
  if (bytes.size() - offset < count * 3) {
    throw Error(ErrorCode::kCorruptFile, "truncated PPM raster");
  }
  std::vector<Rgb> pixels(count);
  const uint8_t* p = bytes.data() + offset;
  for (size_t i = 0; i < count; ++i, p += 3) pixels[i] = Rgb{p[0], p[1], p[2]};
  return Raster(static_cast<int>(width), static_cast<int>(height), std::move(pixels));
}

std::vector<uint8_t> EncodePpm(const Raster& raster) {
  const std::string header = "P6\n" + std::to_string(raster.width()) + " " +
                             std::to_string(raster.height()) + "\n255\n";
  std::vector<uint8_t> out(header.begin(), header.end());
  out.reserve(out.size() + raster.size() * 3);
  for (const Rgb& px : raster.pixels()) {
    out.push_back(px.r);
    out.push_back(px.g);
    out.push_back(px.b);
  }
  return out;
}

Raster DecodePng(std::span<const uint8_t> bytes, std::vector<std::string>* warnings) {
  if (!IsPng(bytes)) throw Error(ErrorCode::kUnsupportedFormat, "not a PNG file");
  if (bytes.size() < 33 || std::memcmp(bytes.data() + 12, "IHDR", 4) != 0) {
    throw Error(ErrorCode::kCorruptFile, "PNG is missing its IHDR chunk");
  }
  const uint32_t width = ReadBe32(bytes.data() + 16);
  const uint32_t height = ReadBe32(bytes.data() + 20);
  const int bit_depth = bytes[24];
  if (width < 1 || height < 1 || width > kMaxDimension || height > kMaxDimension) {
    throw Error(ErrorCode::kCorruptFile, "invalid PNG dimensions");
  }
  if (bit_depth == 16) {
    throw Error(ErrorCode::kUnsupportedFormat, "16-bit PNG input is not supported");
  }

  auto state = std::make_unique<PngReadState>();
  state->input = bytes;
  state->pixels.resize(static_cast<size_t>(width) * height * 3);
  state->rows.resize(height);
  for (uint32_t y = 0; y < height; ++y) {
    state->rows[y] = state->pixels.data() + static_cast<size_t>(y) * width * 3;
  }
  if (!RunPngDecode(state.get(), width, height)) {
    throw Error(ErrorCode::kCorruptFile, std::string("PNG decode failed: ") + state->message);
  }
  if (state->had_alpha) {
    const std::string note = "alpha channel dropped while loading PNG";
    if (warnings != nullptr) {
      warnings->push_back(note);
    } else {
      std::cerr << "warning: " << note << "\n";
    }
  }
  std::vector<Rgb> pixels(static_cast<size_t>(width) * height);
  for (size_t i = 0; i < pixels.size(); ++i) {
    pixels[i] = Rgb{state->pixels[3 * i], state->pixels[3 * i + 1], state->pixels[3 * i + 2]};
  }
  return Raster(static_cast<int>(width), static_cast<int>(height), std::move(pixels));
}

std::vector<uint8_t> EncodePng(const Raster& raster) {
  std::vector<uint8_t> data;
  data.reserve(raster.size() * 3);
  for (const Rgb& px : raster.pixels()) {
    data.push_back(px.r);
    data.push_back(px.g);
    data.push_back(px.b);
  }
  return EncodePngRows(raster.width(), raster.height(), 8, PNG_COLOR_TYPE_RGB, data,
                       static_cast<size_t>(raster.width()) * 3);
}

Raster LoadImage(const std::filesystem::path& path, std::vector<std::string>* warnings) {
  const std::vector<uint8_t> bytes = ReadFile(path);
  if (IsPng(bytes)) return DecodePng(bytes, warnings);
  if (IsPpm(bytes)) return DecodePpm(bytes);
  throw Error(ErrorCode::kUnsupportedFormat,
              "unrecognized image format (expected PNG or P6): " + path.string());
}

void SaveImage(const Raster& raster, const std::filesystem::path& path) {
  WriteFile(path, HasPpmExtension(path) ? EncodePpm(raster) : EncodePng(raster));
}

void SaveMask(const Mask& mask, const std::filesystem::path& path) {
  const size_t row_bytes = (static_cast<size_t>(mask.width()) + 7) / 8;
  std::vector<uint8_t> data(row_bytes * static_cast<size_t>(mask.height()), 0);
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) {
      if (!mask.at(x, y)) {
        data[static_cast<size_t>(y) * row_bytes + x / 8] |=
            static_cast<uint8_t>(0x80u >> (x % 8));
      }
    }
  }
  WriteFile(path, EncodePngRows(mask.width(), mask.height(), 1, PNG_COLOR_TYPE_GRAY, data,
                                row_bytes));
}

Mask LoadMask(const std::filesystem::path& path) {
  std::vector<std::string> ignored;
  const Raster image = LoadImage(path, &ignored);
  Mask mask(image.width(), image.height());
  for (size_t i = 0; i < image.size(); ++i) {
    const Rgb& px = image[i];
    mask.set(i, int{px.r} + int{px.g} + int{px.b} < 384);
  }
  return mask;
}

void SavePlanePreview(const PlaneF& plane, const std::filesystem::path& path) {
  std::vector<uint8_t> data(plane.size());
  for (size_t i = 0; i < plane.size(); ++i) data[i] = QuantizeChannel(plane[i] + 128.0);
  WriteFile(path, EncodePngRows(plane.width(), plane.height(), 8, PNG_COLOR_TYPE_GRAY, data,
                                static_cast<size_t>(plane.width())));
}

}  // namespace sketchrestore
