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

#include "tig/core/types.h"

#include <cmath>
#include <string>

#include "tig/core/errors.h"

namespace tig {

std::string_view ToString(ModelFamily family) {
  switch (family) {
    case ModelFamily::kVae: return "vae";
    case ModelFamily::kGan: return "gan";
    case ModelFamily::kDm: return "dm";
    case ModelFamily::kToy: return "toy";
  }
  return "unknown";
}

ModelFamily ParseModelFamily(std::string_view text) {
  if (text == "vae") return ModelFamily::kVae;
  if (text == "gan") return ModelFamily::kGan;
  if (text == "dm") return ModelFamily::kDm;
  if (text == "toy") return ModelFamily::kToy;
  throw Error(ErrorKind::kParse, "unknown model family '" + std::string(text) + "'");
}

void SearchConfig::Validate() const {
  if (pop_size < 1) throw Error(ErrorKind::kInvalidArgument, "pop_size must be >= 1");
  if (tshd_best < 1 || tshd_best > pop_size) {
    throw Error(ErrorKind::kInvalidArgument, "tshd_best must be in [1, pop_size]");
  }
  // Offspring need two distinct parents.
  if (tshd_best < 2 && tshd_best < pop_size) {
    throw Error(ErrorKind::kInvalidArgument,
                "tshd_best must be >= 2 when offspring are produced");
  }
  if (max_iterations < 1) {
    throw Error(ErrorKind::kInvalidArgument, "max_iterations must be >= 1");
  }
  if (!(delta_init > 0.0) || !std::isfinite(delta_init)) {
    throw Error(ErrorKind::kInvalidArgument, "delta_init must be a positive number");
  }
  bounds.Validate();
}

void SeedSpec::Validate() const {
  if (family == ModelFamily::kDm && !prompt) {
    throw Error(ErrorKind::kInvalidArgument, "dm seeds need a prompt");
  }
  if (family == ModelFamily::kGan && !condition_label) {
    throw Error(ErrorKind::kInvalidArgument, "gan seeds need a condition label");
  }
}

}  // namespace tig
