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

#ifndef TIG_ADAPTERS_DECODE_H_
#define TIG_ADAPTERS_DECODE_H_

#include <span>
#include <vector>

#include "tig/adapters/model.h"

namespace tig::adapters {

// Batched decode with boundary checks: latent dimensions, one image per
// latent, declared output shape. Backend exceptions become AdapterError.
std::vector<Image> Decode(GeneratorModel& generator,
                          std::span<const LatentVector> latents,
                          const DecodeContext& context);

}  // namespace tig::adapters

#endif  // TIG_ADAPTERS_DECODE_H_
