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

#include "tig/adapters/seeds.h"

#include <cmath>
#include <random>

#include "tig/core/errors.h"

namespace tig::adapters {

LatentVector SampleStandardNormal(std::size_t dimension, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> values(dimension);
  for (double& v : values) v = normal(rng);
  return LatentVector(std::move(values));
}

SeedSpec VaeSeed(const Image& dataset_image, ClassIndex label, Encoder& encoder) {
  if (!(dataset_image.shape() == encoder.input_shape())) {
    throw AdapterError("dataset image shape does not match the encoder", std::nullopt);
  }
  LatentVector mean = encoder.EncodeMean(dataset_image);
  if (mean.dimension() != encoder.latent_dimension()) {
    throw AdapterError("encoder returned a latent of the wrong dimension", std::nullopt);
  }
  return SeedSpec{std::move(mean), label, ModelFamily::kVae, std::nullopt, std::nullopt};
}

SeedSpec GanSeed(ClassIndex label, std::size_t num_classes, std::size_t dimension,
                 Rng& rng) {
  if (label >= num_classes) {
    throw Error(ErrorKind::kInvalidArgument, "condition label out of range");
  }
  return SeedSpec{SampleStandardNormal(dimension, rng), label, ModelFamily::kGan,
                  std::nullopt, label};
}

std::string FillPrompt(std::string_view prompt_template, std::string_view class_name) {
  if (prompt_template.find(kClassPlaceholder) == std::string_view::npos) {
    throw Error(ErrorKind::kInvalidArgument,
                "prompt template lacks the {class} placeholder");
  }
  std::string prompt;
  std::size_t pos = 0;
  while (true) {
    const std::size_t hit = prompt_template.find(kClassPlaceholder, pos);
    if (hit == std::string_view::npos) break;
    prompt.append(prompt_template.substr(pos, hit - pos));
    prompt.append(class_name);
    pos = hit + kClassPlaceholder.size();
  }
  prompt.append(prompt_template.substr(pos));
  return prompt;
}

SeedSpec DmSeed(std::string_view class_name, std::string_view prompt_template,
                const ClassMap& classes, std::size_t dimension, Rng& rng) {
  const ClassIndex label = classes.IndexOf(class_name);
  std::string prompt = FillPrompt(prompt_template, class_name);
  return SeedSpec{SampleStandardNormal(dimension, rng), label, ModelFamily::kDm,
                  std::move(prompt), label};
}

SeedSpec ToySeed(const LinearBoundary& boundary, const ToySeedRegion& region, Rng& rng) {
  if (!(region.low < region.high)) {
    throw Error(ErrorKind::kInvalidArgument, "empty toy seed region");
  }
  std::uniform_real_distribution<double> uniform(region.low, region.high);
  for (int attempt = 0; attempt < 1'000'000; ++attempt) {
    std::vector<double> z(boundary.weights.size());
    for (double& v : z) v = uniform(rng);
    LatentVector latent(std::move(z));
    const double margin = ToyOracleMargin(latent, boundary);
    if (std::abs(margin) >= region.min_margin) {
      return SeedSpec{std::move(latent), margin > 0.0 ? ClassIndex{0} : ClassIndex{1},
                      ModelFamily::kToy, std::nullopt, std::nullopt};
    }
  }
  throw Error(ErrorKind::kInvalidArgument,
              "no toy seed with the requested margin inside the region");
}

}  // namespace tig::adapters
