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

#include "tig/genetic/operators.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "tig/core/errors.h"

namespace tig::genetic {

LatentVector MutateWithNoise(const LatentVector& z, double delta,
                             std::span<const double> noise) {
  if (!(delta >= 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "perturbation step must be >= 0");
  }
  if (noise.size() != z.dimension()) {
    throw Error(ErrorKind::kInvalidArgument, "noise dimension mismatch");
  }
  std::vector<double> out(z.values().begin(), z.values().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += noise[i] * delta;
  return LatentVector(std::move(out));
}

LatentVector Mutate(const LatentVector& z, double delta, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> noise(z.dimension());
  for (double& e : noise) e = normal(rng);
  return MutateWithNoise(z, delta, noise);
}

LatentVector CrossoverAt(const LatentVector& p1, const LatentVector& p2,
                         std::size_t cut) {
  if (p1.dimension() != p2.dimension()) {
    throw Error(ErrorKind::kInvalidArgument, "crossover parents differ in dimension");
  }
  const std::size_t d = p1.dimension();
  if (d < 2) {
    throw Error(ErrorKind::kDegenerateCrossover,
                "single-point crossover needs dimension >= 2");
  }
  if (cut == 0 || cut >= d) {
    throw Error(ErrorKind::kInvalidArgument,
                "cut point " + std::to_string(cut) + " outside [1, d-1]");
  }
  std::vector<double> out(p1.values().begin(), p1.values().begin() + cut);
  out.insert(out.end(), p2.values().begin() + cut, p2.values().end());
  return LatentVector(std::move(out));
}

LatentVector Crossover(const LatentVector& p1, const LatentVector& p2, Rng& rng) {
  if (p1.dimension() != p2.dimension()) {
    throw Error(ErrorKind::kInvalidArgument, "crossover parents differ in dimension");
  }
  if (p1.dimension() < 2) {
    throw Error(ErrorKind::kDegenerateCrossover,
                "single-point crossover needs dimension >= 2");
  }
  std::uniform_int_distribution<std::size_t> pick(1, p1.dimension() - 1);
  return CrossoverAt(p1, p2, pick(rng));
}

LatentVector Clamp(const LatentVector& z, const LatentBounds& bounds) {
  std::vector<double> out(z.values().begin(), z.values().end());
  for (double& v : out) v = std::clamp(v, bounds.min_value, bounds.max_value);
  return LatentVector(std::move(out));
}

std::vector<std::size_t> SelectIndices(std::span<const Individual> population,
                                       std::size_t tshd_best) {
  if (tshd_best > population.size()) {
    throw Error(ErrorKind::kInvalidArgument, "tshd_best exceeds population size");
  }
  for (std::size_t i = 0; i < population.size(); ++i) {
    if (!population[i].fitness) {
      throw Error(ErrorKind::kInvalidState,
                  "individual " + std::to_string(i) + " has no fitness");
    }
  }
  std::vector<std::size_t> order(population.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return *population[a].fitness < *population[b].fitness;
  });
  order.resize(tshd_best);
  return order;
}

std::vector<Individual> Select(std::span<const Individual> population,
                               std::size_t tshd_best) {
  std::vector<Individual> selected;
  selected.reserve(tshd_best);
  for (std::size_t i : SelectIndices(population, tshd_best)) {
    selected.push_back(population[i]);
  }
  return selected;
}

std::vector<LatentVector> MakeOffspring(std::span<const Individual> parents,
                                        std::size_t count, double delta,
                                        const LatentBounds& bounds, Rng& rng) {
  if (parents.size() < 2) {
    throw Error(ErrorKind::kInvalidArgument, "offspring need at least two parents");
  }
  std::vector<LatentVector> offspring;
  offspring.reserve(count);
  std::uniform_int_distribution<std::size_t> first(0, parents.size() - 1);
  std::uniform_int_distribution<std::size_t> second(0, parents.size() - 2);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t i = first(rng);
    std::size_t j = second(rng);
    if (j >= i) ++j;
    LatentVector child = Crossover(parents[i].latent, parents[j].latent, rng);
    child = Mutate(child, delta, rng);
    offspring.push_back(Clamp(child, bounds));
  }
  return offspring;
}

}  // namespace tig::genetic
