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

// Plugin exercising the dlopen adapter path. The diffusion backend writes
// guidance_scale / 10 into every pixel; the generator writes the first
// latent coordinate; the classifier always prefers class 0.
#include <vector>

#include "tig/adapters/diffusion.h"
#include "tig/adapters/registry.h"

namespace {

using namespace tig;

class GuidanceEcho : public adapters::DiffusionBackend {
 public:
  explicit GuidanceEcho(std::size_t d) : d_(d) {}
  std::size_t latent_dimension() const override { return d_; }
  ImageShape image_shape() const override { return {2, 2, 1}; }
  std::vector<Image> Sample(std::span<const LatentVector> latents,
                            const adapters::DmDecodeContext& context) override {
    return std::vector<Image>(
        latents.size(), Image(image_shape(), std::vector<float>(4, float(context.guidance_scale / 10))));
  }

 private:
  std::size_t d_;
};

class FirstCoordinate : public GeneratorModel {
 public:
  explicit FirstCoordinate(std::size_t d) : d_(d) {}
  std::size_t latent_dimension() const override { return d_; }
  ImageShape image_shape() const override { return {2, 2, 1}; }
  std::vector<Image> DecodeBatch(std::span<const LatentVector> latents,
                                 const DecodeContext&) override {
    std::vector<Image> out;
    for (const LatentVector& z : latents) {
      const float v = float(std::min(1.0, std::max(0.0, z[0])));
      out.emplace_back(image_shape(), std::vector<float>(4, v));
    }
    return out;
  }

 private:
  std::size_t d_;
};

class PreferZero : public ClassifierUnderTest {
 public:
  explicit PreferZero(std::size_t n) : n_(n) {}
  std::size_t num_classes() const override { return n_; }
  ImageShape input_shape() const override { return {2, 2, 1}; }
  std::vector<fitness::SoftmaxVector> Classify(std::span<const Image> images) override {
    std::vector<double> p(n_, 0.2 / double(n_ - 1));
    p[0] = 0.8;
    return std::vector<fitness::SoftmaxVector>(images.size(),
                                               fitness::SoftmaxVector::FromProbabilities(p));
  }

 private:
  std::size_t n_;
};

}  // namespace

extern "C" {

tig::adapters::DiffusionBackend* tig_plugin_create_diffusion_backend(
    const tig::adapters::AdapterManifest* manifest) {
  return new GuidanceEcho(manifest->latent_dim());
}

tig::GeneratorModel* tig_plugin_create_generator(const tig::adapters::AdapterManifest* manifest) {
  return new FirstCoordinate(manifest->latent_dim());
}

tig::ClassifierUnderTest* tig_plugin_create_classifier(
    const tig::adapters::AdapterManifest* manifest) {
  return new PreferZero(manifest->num_classes());
}
}
