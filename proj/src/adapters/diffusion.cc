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

#include "tig/adapters/diffusion.h"

#include "tig/core/errors.h"

namespace tig::adapters {

void GuidancePolicy::Validate() const {
  if (!(seed_scale > 0.0) || !(mutation_scale > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "guidance scales must be positive");
  }
  if (denoising_steps == 0) {
    throw Error(ErrorKind::kInvalidArgument, "denoising steps must be positive");
  }
}

DmDecodeContext GuidancePolicy::For(DecodePhase phase, const std::string& prompt) const {
  return {prompt, phase == DecodePhase::kSeed ? seed_scale : mutation_scale,
          denoising_steps};
}

DiffusionGenerator::DiffusionGenerator(std::unique_ptr<DiffusionBackend> backend,
                                       GuidancePolicy policy)
    : backend_(std::move(backend)), policy_(policy) {
  if (!backend_) throw Error(ErrorKind::kInvalidArgument, "null diffusion backend");
  policy_.Validate();
}

std::vector<Image> DiffusionGenerator::DecodeBatch(std::span<const LatentVector> latents,
                                                   const DecodeContext& context) {
  if (!context.prompt) {
    throw AdapterError("diffusion decode needs a prompt", std::nullopt);
  }
  return backend_->Sample(latents, policy_.For(context.phase, *context.prompt));
}

}  // namespace tig::adapters
