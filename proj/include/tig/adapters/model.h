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

#ifndef TIG_ADAPTERS_MODEL_H_
#define TIG_ADAPTERS_MODEL_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tig/core/image.h"
#include "tig/core/latent.h"
#include "tig/core/types.h"
#include "tig/fitness/fitness.h"

namespace tig {

// Diffusion adapters pick their guidance scale from the phase: seed images
// favour diversity, mutation favours label adherence.
enum class DecodePhase { kSeed, kMutation };

struct DecodeContext {
  ModelFamily family = ModelFamily::kToy;
  DecodePhase phase = DecodePhase::kMutation;
  std::optional<std::string> prompt;
  std::optional<ClassIndex> condition_label;

  static DecodeContext ForSeed(const SeedSpec& seed, DecodePhase phase) {
    return {seed.family, phase, seed.prompt, seed.condition_label};
  }
};

// A generative model decoder. Implementations must be deterministic for a
// fixed latent and context; instances are not assumed to be thread-safe.
class GeneratorModel {
 public:
  virtual ~GeneratorModel() = default;

  virtual std::size_t latent_dimension() const = 0;
  virtual ImageShape image_shape() const = 0;
  // False only for analytic generators whose pixels are raw coordinates.
  virtual bool unit_range_output() const { return true; }
  virtual std::vector<Image> DecodeBatch(std::span<const LatentVector> latents,
                                         const DecodeContext& context) = 0;
};

// The classifier under test. Returns one softmax row per image.
class ClassifierUnderTest {
 public:
  virtual ~ClassifierUnderTest() = default;

  virtual std::size_t num_classes() const = 0;
  virtual ImageShape input_shape() const = 0;
  virtual std::vector<fitness::SoftmaxVector> Classify(
      std::span<const Image> images) = 0;
};

// Image -> latent mean, used to seed VAE searches from dataset images.
class Encoder {
 public:
  virtual ~Encoder() = default;

  virtual std::size_t latent_dimension() const = 0;
  virtual ImageShape input_shape() const = 0;
  virtual LatentVector EncodeMean(const Image& image) = 0;
};

}  // namespace tig

#endif  // TIG_ADAPTERS_MODEL_H_
