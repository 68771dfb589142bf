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

#ifndef TIG_GENETIC_OPERATORS_H_
#define TIG_GENETIC_OPERATORS_H_

#include <cstddef>
#include <span>
#include <vector>

#include "tig/core/latent.h"
#include "tig/core/random.h"
#include "tig/core/types.h"

namespace tig::genetic {

// z + noise * delta, with caller-provided noise (one value per coordinate).
LatentVector MutateWithNoise(const LatentVector& z, double delta,
                             std::span<const double> noise);

// z + eps * delta with eps ~ N(0, 1)^d drawn from `rng`.
LatentVector Mutate(const LatentVector& z, double delta, Rng& rng);

// Prefix [0, cut) from p1, suffix [cut, d) from p2. Requires 0 < cut < d.
LatentVector CrossoverAt(const LatentVector& p1, const LatentVector& p2,
                         std::size_t cut);

// Single-point crossover with the cut drawn uniformly from {1, ..., d-1}.
LatentVector Crossover(const LatentVector& p1, const LatentVector& p2, Rng& rng);

LatentVector Clamp(const LatentVector& z, const LatentBounds& bounds);

// Population indices of the `tshd_best` lowest-fitness individuals in
// ascending fitness order; equal fitness keeps population order.
std::vector<std::size_t> SelectIndices(std::span<const Individual> population,
                                       std::size_t tshd_best);

std::vector<Individual> Select(std::span<const Individual> population,
                               std::size_t tshd_best);

// Each offspring: two distinct parents drawn uniformly, crossover, mutate
// with `delta`, clamp into `bounds`.
std::vector<LatentVector> MakeOffspring(std::span<const Individual> parents,
                                        std::size_t count, double delta,
                                        const LatentBounds& bounds, Rng& rng);

}  // namespace tig::genetic

#endif  // TIG_GENETIC_OPERATORS_H_
