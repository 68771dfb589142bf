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

#include "tig/core/image.h"

#include <cmath>
#include <string>

#include "tig/core/errors.h"

namespace tig {

Image::Image(ImageShape shape, std::vector<float> pixels)
    : shape_(shape), pixels_(std::move(pixels)) {
  if (shape_.size() == 0) {
    throw Error(ErrorKind::kInvalidArgument, "image shape has a zero extent");
  }
  if (pixels_.size() != shape_.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "image has " + std::to_string(pixels_.size()) +
                    " values, shape needs " + std::to_string(shape_.size()));
  }
  for (float v : pixels_) {
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::kInvalidInput, "image value is not finite");
    }
  }
}

bool Image::InUnitRange() const {
  for (float v : pixels_) {
    if (v < 0.0f || v > 1.0f) return false;
  }
  return true;
}

}  // namespace tig
