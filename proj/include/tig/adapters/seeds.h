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

#ifndef TIG_ADAPTERS_SEEDS_H_
#define TIG_ADAPTERS_SEEDS_H_

#include <cstddef>
#include <string>
#include <string_view>

#include "tig/adapters/class_map.h"
#include "tig/adapters/model.h"
#include "tig/adapters/toy.h"
#include "tig/core/random.h"
#include "tig/core/types.h"

namespace tig::adapters {

// N(0, I) sample: the training prior of the GAN and DM latents.
LatentVector SampleStandardNormal(std::size_t dimension, Rng& rng);

// VAE seed: encoder mean of a labelled dataset image.
SeedSpec VaeSeed(const Image& dataset_image, ClassIndex label, Encoder& encoder);

// Conditional GAN seed: prior sample conditioned on `label`.
SeedSpec GanSeed(ClassIndex label, std::size_t num_classes, std::size_t dimension,
                 Rng& rng);

inline constexpr std::string_view kClassPlaceholder = "{class}";

// Replaces every `{class}` in `prompt_template` with `class_name`.
std::string FillPrompt(std::string_view prompt_template, std::string_view class_name);

// Prompted DM seed: prior sample plus a filled prompt.
SeedSpec DmSeed(std::string_view class_name, std::string_view prompt_template,
                const ClassMap& classes, std::size_t dimension, Rng& rng);

// Toy seed: uniform in [low, high]^d, resampled until the classifier's
// |margin| >= min_margin. The expected label is the predicted one, so the
// seed is always correctly classified.
struct ToySeedRegion {
  double low = -1.0;
  double high = 1.0;
  double min_margin = 0.1;
};

SeedSpec ToySeed(const LinearBoundary& boundary, const ToySeedRegion& region, Rng& rng);

}  // namespace tig::adapters

#endif  // TIG_ADAPTERS_SEEDS_H_
