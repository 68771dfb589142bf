// Copyright 2026 The TIG Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tig/adapters/io.h"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>

#include "tig/core/errors.h"

namespace tig::adapters {
namespace {

std::vector<unsigned char> ReadAll(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::uint32_t BigEndian32(const unsigned char* b) {
  return std::uint32_t{b[0]} << 24 | std::uint32_t{b[1]} << 16 | std::uint32_t{b[2]} << 8 |
         std::uint32_t{b[3]};
}

png_uint_32 PngFormat(std::size_t channels) {
  switch (channels) {
    case 1: return PNG_FORMAT_GRAY;
    case 2: return PNG_FORMAT_GA;
    case 3: return PNG_FORMAT_RGB;
    case 4: return PNG_FORMAT_RGBA;
  }
  throw Error(ErrorKind::kInvalidArgument,
              "PNG supports 1-4 channels, image has " + std::to_string(channels));
}

}  // namespace

void WriteLatents(const std::filesystem::path& path, std::span<const LatentVector> latents) {
  if (latents.empty()) throw Error(ErrorKind::kInvalidArgument, "no latents to write");
  const std::uint32_t d = static_cast<std::uint32_t>(latents.front().dimension());
  std::vector<unsigned char> out(kLatentMagic, kLatentMagic + 4);
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<unsigned char>(d >> (8 * i)));
  for (const LatentVector& z : latents) {
    if (z.dimension() != d) throw Error(ErrorKind::kInvalidArgument, "mixed latent dimensions");
    for (double v : z.values()) {
      const float f = static_cast<float>(v);
      std::uint32_t bits;
      std::memcpy(&bits, &f, sizeof(bits));
      for (int i = 0; i < 4; ++i) out.push_back(static_cast<unsigned char>(bits >> (8 * i)));
    }
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file.write(reinterpret_cast<const char*>(out.data()),
                  static_cast<std::streamsize>(out.size()))) {
    throw Error(ErrorKind::kIo, "cannot write " + path.string());
  }
}

std::vector<LatentVector> ReadLatents(const std::filesystem::path& path) {
  const std::vector<unsigned char> raw = ReadAll(path);
  if (raw.size() < 8 || std::memcmp(raw.data(), kLatentMagic, 4) != 0) {
    throw Error(ErrorKind::kParse, path.string() + ": not a latent file");
  }
  const std::uint32_t d = std::uint32_t{raw[4]} | std::uint32_t{raw[5]} << 8 |
                          std::uint32_t{raw[6]} << 16 | std::uint32_t{raw[7]} << 24;
  const std::size_t payload = raw.size() - 8;
  if (d == 0 || payload == 0 || payload % (4 * std::size_t{d}) != 0) {
    throw Error(ErrorKind::kParse, path.string() + ": payload does not match dimension");
  }
  std::vector<LatentVector> latents;
  for (std::size_t offset = 8; offset < raw.size(); offset += 4 * std::size_t{d}) {
    std::vector<double> values(d);
    for (std::size_t i = 0; i < d; ++i) {
      const unsigned char* b = &raw[offset + 4 * i];
      const std::uint32_t bits = std::uint32_t{b[0]} | std::uint32_t{b[1]} << 8 |
                                 std::uint32_t{b[2]} << 16 | std::uint32_t{b[3]} << 24;
      float f;
      std::memcpy(&f, &bits, sizeof(f));
      values[i] = f;
    }
    latents.emplace_back(std::move(values));
  }
  return latents;
}

void WritePng(const std::filesystem::path& path, const Image& image) {
  png_image png;
  std::memset(&png, 0, sizeof(png));
  png.version = PNG_IMAGE_VERSION;
  png.width = static_cast<png_uint_32>(image.shape().width);
  png.height = static_cast<png_uint_32>(image.shape().height);
  png.format = PngFormat(image.shape().channels);
  std::vector<unsigned char> bytes(image.pixels().size());
  std::transform(image.pixels().begin(), image.pixels().end(), bytes.begin(), [](float v) {
    return static_cast<unsigned char>(std::lround(std::clamp(v, 0.0f, 1.0f) * 255.0f));
  });
  if (!png_image_write_to_file(&png, path.c_str(), 0, bytes.data(), 0, nullptr)) {
    throw Error(ErrorKind::kIo, "cannot write PNG " + path.string() + ": " + png.message);
  }
}

Image ReadPng(const std::filesystem::path& path) {
  png_image png;
  std::memset(&png, 0, sizeof(png));
  png.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&png, path.c_str())) {
    throw Error(ErrorKind::kIo, "cannot read PNG " + path.string() + ": " + png.message);
  }
  const std::size_t channels = PNG_IMAGE_PIXEL_CHANNELS(png.format);
  std::vector<unsigned char> bytes(PNG_IMAGE_SIZE(png));
  if (!png_image_finish_read(&png, nullptr, bytes.data(), 0, nullptr)) {
    throw Error(ErrorKind::kIo, "cannot decode PNG " + path.string() + ": " + png.message);
  }
  std::vector<float> pixels(bytes.size());
  std::transform(bytes.begin(), bytes.end(), pixels.begin(),
                 [](unsigned char b) { return static_cast<float>(b) / 255.0f; });
  return Image({png.height, png.width, channels}, std::move(pixels));
}

LabelledImages ReadIdx(const std::filesystem::path& images_path,
                       const std::filesystem::path& labels_path) {
  const std::vector<unsigned char> images = ReadAll(images_path);
  const std::vector<unsigned char> labels = ReadAll(labels_path);
  if (images.size() < 16 || BigEndian32(images.data()) != 0x00000803) {
    throw Error(ErrorKind::kParse, images_path.string() + ": not an IDX u8 rank-3 file");
  }
  if (labels.size() < 8 || BigEndian32(labels.data()) != 0x00000801) {
    throw Error(ErrorKind::kParse, labels_path.string() + ": not an IDX u8 rank-1 file");
  }
  const std::size_t count = BigEndian32(images.data() + 4);
  const std::size_t rows = BigEndian32(images.data() + 8);
  const std::size_t cols = BigEndian32(images.data() + 12);
  if (images.size() != 16 + count * rows * cols || BigEndian32(labels.data() + 4) != count ||
      labels.size() != 8 + count) {
    throw Error(ErrorKind::kParse, "IDX image/label files are inconsistent");
  }
  LabelledImages out;
  out.images.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    const unsigned char* base = images.data() + 16 + n * rows * cols;
    std::vector<float> pixels(rows * cols);
    for (std::size_t i = 0; i < pixels.size(); ++i) pixels[i] = base[i] / 255.0f;
    out.images.emplace_back(ImageShape{rows, cols, 1}, std::move(pixels));
    out.labels.push_back(labels[8 + n]);
  }
  return out;
}

}  // namespace tig::adapters
