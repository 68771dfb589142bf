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

#ifndef TIG_ADAPTERS_IO_H_
#define TIG_ADAPTERS_IO_H_

#include <filesystem>
#include <span>
#include <vector>

#include "tig/core/image.h"
#include "tig/core/latent.h"
#include "tig/core/types.h"

namespace tig::adapters {

// Latent file: 8-byte header (magic "TIGL", u32 LE dimension) followed by
// one or more vectors of `dimension` little-endian float32 values.
inline constexpr char kLatentMagic[4] = {'T', 'I', 'G', 'L'};

void WriteLatents(const std::filesystem::path& path, std::span<const LatentVector> latents);
std::vector<LatentVector> ReadLatents(const std::filesystem::path& path);

// 8-bit PNG; 1/2/3/4 channels map to gray, gray+alpha, RGB, RGBA. Values
// are clamped to [0, 1] before quantization.
void WritePng(const std::filesystem::path& path, const Image& image);
Image ReadPng(const std::filesystem::path& path);

struct LabelledImages {
  std::vector<Image> images;
  std::vector<ClassIndex> labels;
};

// MNIST-style IDX files (u8 images of rank 3, u8 labels of rank 1).
// Pixels are scaled to [0, 1].
LabelledImages ReadIdx(const std::filesystem::path& images_path,
                       const std::filesystem::path& labels_path);

}  // namespace tig::adapters

#endif  // TIG_ADAPTERS_IO_H_
