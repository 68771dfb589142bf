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

#ifndef TIG_CORE_IMAGE_H_
#define TIG_CORE_IMAGE_H_

#include <cstddef>
#include <span>
#include <vector>

namespace tig {

struct ImageShape {
  std::size_t height = 0;
  std::size_t width = 0;
  std::size_t channels = 0;

  std::size_t size() const { return height * width * channels; }
  friend bool operator==(const ImageShape&, const ImageShape&) = default;
};

// Canonical interchange image: H x W x C, row-major, channel innermost.
// Generators produce values in [0, 1]; the analytic toy generator is the one
// exception (it passes latent coordinates through unchanged).
class Image {
 public:
  Image(ImageShape shape, std::vector<float> pixels);

  const ImageShape& shape() const { return shape_; }
  std::span<const float> pixels() const { return pixels_; }
  float at(std::size_t row, std::size_t col, std::size_t channel) const {
    return pixels_[(row * shape_.width + col) * shape_.channels + channel];
  }

  bool InUnitRange() const;

  friend bool operator==(const Image&, const Image&) = default;

 private:
  ImageShape shape_;
  std::vector<float> pixels_;
};

}  // namespace tig

#endif  // TIG_CORE_IMAGE_H_
