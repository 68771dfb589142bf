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

#include "tig/adapters/decode.h"

#include <string>

#include "tig/core/errors.h"

namespace tig::adapters {

std::vector<Image> Decode(GeneratorModel& generator,
                          std::span<const LatentVector> latents,
                          const DecodeContext& context) {
  const std::size_t d = generator.latent_dimension();
  for (std::size_t i = 0; i < latents.size(); ++i) {
    if (latents[i].dimension() != d) {
      throw AdapterError("latent dimension " + std::to_string(latents[i].dimension()) +
                             " does not match generator dimension " + std::to_string(d),
                         i);
    }
  }
  if (latents.empty()) return {};
  std::vector<Image> images;
  try {
    images = generator.DecodeBatch(latents, context);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw AdapterError(std::string("generator backend failed: ") + e.what(),
                       std::nullopt);
  }
  if (images.size() != latents.size()) {
    throw AdapterError("generator returned " + std::to_string(images.size()) +
                           " images for " + std::to_string(latents.size()) + " latents",
                       std::nullopt);
  }
  const ImageShape shape = generator.image_shape();
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!(images[i].shape() == shape)) {
      throw AdapterError("decoded image has an undeclared shape", i);
    }
    if (generator.unit_range_output() && !images[i].InUnitRange()) {
      throw AdapterError("decoded image has values outside [0, 1]", i);
    }
  }
  return images;
}

}  // namespace tig::adapters
