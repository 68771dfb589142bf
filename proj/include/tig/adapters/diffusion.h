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

#ifndef TIG_ADAPTERS_DIFFUSION_H_
#define TIG_ADAPTERS_DIFFUSION_H_

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "tig/adapters/model.h"

namespace tig::adapters {

struct DmDecodeContext {
  std::string prompt;
  double guidance_scale = 0.0;
  std::size_t denoising_steps = 0;
};

// Seeds are sampled with a higher guidance scale than mutants: 3.5 vs 1.4.
struct GuidancePolicy {
  double seed_scale = 3.5;
  double mutation_scale = 1.4;
  std::size_t denoising_steps = 25;

  void Validate() const;
  DmDecodeContext For(DecodePhase phase, const std::string& prompt) const;
};

// A pinned diffusion sampler (fixed scheduler, step count and auxiliary
// noise) so that sampling is a pure function of the latent and context.
class DiffusionBackend {
 public:
  virtual ~DiffusionBackend() = default;

  virtual std::size_t latent_dimension() const = 0;
  virtual ImageShape image_shape() const = 0;
  virtual std::vector<Image> Sample(std::span<const LatentVector> latents,
                                    const DmDecodeContext& context) = 0;
};

// GeneratorModel over a diffusion backend; resolves guidance from the
// decode phase.
class DiffusionGenerator : public GeneratorModel {
 public:
  DiffusionGenerator(std::unique_ptr<DiffusionBackend> backend, GuidancePolicy policy);

  std::size_t latent_dimension() const override { return backend_->latent_dimension(); }
  ImageShape image_shape() const override { return backend_->image_shape(); }
  std::vector<Image> DecodeBatch(std::span<const LatentVector> latents,
                                 const DecodeContext& context) override;

  const GuidancePolicy& policy() const { return policy_; }

 private:
  std::unique_ptr<DiffusionBackend> backend_;
  GuidancePolicy policy_;
};

}  // namespace tig::adapters

#endif  // TIG_ADAPTERS_DIFFUSION_H_
