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

#ifndef TIG_CORE_TYPES_H_
#define TIG_CORE_TYPES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "tig/core/image.h"
#include "tig/core/latent.h"

namespace tig {

using ClassIndex = std::size_t;

enum class ModelFamily { kVae, kGan, kDm, kToy };

std::string_view ToString(ModelFamily family);
ModelFamily ParseModelFamily(std::string_view text);

struct SearchConfig {
  std::size_t pop_size = 25;
  std::size_t tshd_best = 10;
  std::size_t max_iterations = 250;
  double delta_init = 0.0;
  LatentBounds bounds;
  std::uint64_t rng_seed = 0;

  void Validate() const;
};

struct SeedSpec {
  LatentVector latent;
  ClassIndex expected_label = 0;
  ModelFamily family = ModelFamily::kToy;
  std::optional<std::string> prompt;
  std::optional<ClassIndex> condition_label;

  void Validate() const;
};

// One member of the search population. Decoded image, label and fitness are
// cached so surviving elites are never re-decoded.
struct Individual {
  LatentVector latent;
  std::optional<Image> image;
  std::optional<ClassIndex> predicted_label;
  std::optional<double> fitness;

  explicit Individual(LatentVector z) : latent(std::move(z)) {}

  bool evaluated() const { return fitness.has_value(); }
};

}  // namespace tig

#endif  // TIG_CORE_TYPES_H_
