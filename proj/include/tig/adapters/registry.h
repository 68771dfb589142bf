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

#ifndef TIG_ADAPTERS_REGISTRY_H_
#define TIG_ADAPTERS_REGISTRY_H_

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "tig/adapters/class_map.h"
#include "tig/adapters/diffusion.h"
#include "tig/adapters/model.h"
#include "tig/adapters/seeds.h"
#include "tig/adapters/toy.h"
#include "tig/core/key_value.h"

namespace tig::adapters {

// Adapter manifest: a key-value file describing one generator/classifier
// pairing. Relative paths resolve against the manifest's directory.
//
//   family            vae | gan | dm | toy
//   latent_dim        latent dimension d
//   image_height, image_width, image_channels
//   num_classes
//   generator         toy_identity | mlp_vae | plugin
//   classifier        toy_logistic | convnet | plugin
//   encoder           identity | mlp_vae | plugin | none   (vae family)
//   generator_weights, classifier_weights   TIGW archives
//   plugin            shared library exporting the tig_plugin_* factories
//   dataset_images, dataset_labels          IDX files (vae seeds)
//   class_map         class name file (defaults to digits 0-9)
//   prompt_template   dm prompt with a {class} placeholder
//   guidance_seed, guidance_mutation, denoising_steps
//   toy_weights, toy_bias, toy_seed_low, toy_seed_high, toy_min_margin
class AdapterManifest {
 public:
  static AdapterManifest Load(const std::filesystem::path& path);
  static AdapterManifest FromValues(KeyValueFile values, std::filesystem::path base_dir);

  ModelFamily family() const { return family_; }
  std::size_t latent_dim() const { return latent_dim_; }
  ImageShape image_shape() const { return image_shape_; }
  std::size_t num_classes() const { return num_classes_; }
  const KeyValueFile& values() const { return values_; }
  const std::filesystem::path& base_dir() const { return base_dir_; }

  std::filesystem::path ResolvePath(const std::string& key) const;
  ClassMap classes() const;
  GuidancePolicy guidance() const;
  LinearBoundary toy_boundary() const;
  ToySeedRegion toy_seed_region() const;

 private:
  KeyValueFile values_;
  std::filesystem::path base_dir_;
  ModelFamily family_ = ModelFamily::kToy;
  std::size_t latent_dim_ = 0;
  ImageShape image_shape_;
  std::size_t num_classes_ = 0;
};

// Instantiated adapters. `encoder` may alias `generator` (an autoencoder
// serves both roles). Instances are not thread-safe; create one set per
// worker.
struct AdapterSet {
  std::shared_ptr<GeneratorModel> generator;
  std::shared_ptr<ClassifierUnderTest> classifier;
  std::shared_ptr<Encoder> encoder;
};

AdapterSet LoadAdapters(const AdapterManifest& manifest);

}  // namespace tig::adapters

// Plugin ABI. A plugin library exports any of these with C linkage; each
// receives the parsed manifest and returns a heap object owned by the host.
// The library stays loaded for the life of the process.
extern "C" {
using TigCreateGeneratorFn = tig::GeneratorModel* (*)(const tig::adapters::AdapterManifest*);
using TigCreateClassifierFn =
    tig::ClassifierUnderTest* (*)(const tig::adapters::AdapterManifest*);
using TigCreateEncoderFn = tig::Encoder* (*)(const tig::adapters::AdapterManifest*);
using TigCreateDiffusionBackendFn =
    tig::adapters::DiffusionBackend* (*)(const tig::adapters::AdapterManifest*);
}

#endif  // TIG_ADAPTERS_REGISTRY_H_
