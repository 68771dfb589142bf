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

#ifndef TIG_SEARCH_SEARCH_H_
#define TIG_SEARCH_SEARCH_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "tig/adapters/model.h"
#include "tig/core/image.h"
#include "tig/core/latent.h"
#include "tig/core/random.h"
#include "tig/core/types.h"

namespace tig::search {

enum class OutcomeStatus { kSeedRejected, kMisclassificationFound, kBudgetExhausted };

std::string_view ToString(OutcomeStatus status);
OutcomeStatus ParseOutcomeStatus(std::string_view text);

struct TestOutcome {
  OutcomeStatus status = OutcomeStatus::kBudgetExhausted;
  std::optional<Image> image;
  std::optional<LatentVector> best_latent;
  // Loop bodies executed; the iteration that finds a misclassification counts.
  std::size_t iterations = 0;
  // min(F) after each evaluation.
  std::vector<double> fitness_trace;
  double final_delta = 0.0;

  ClassIndex seed_predicted_label = 0;
  double seed_fitness = 0.0;
  // Label assigned to the returned image (misclassification_found only).
  std::optional<ClassIndex> predicted_label;
  std::optional<double> best_fitness;
};

// Snapshot handed to an observer once per loop body, after selection and
// step adaptation.
struct IterationState {
  std::size_t iteration = 0;  // 1-based
  std::size_t population_size = 0;
  std::size_t elite_count = 0;
  std::size_t offspring_count = 0;
  double f_min = 0.0;
  double delta_used = 0.0;  // step applied to this iteration's offspring
};

using IterationObserver = std::function<void(const IterationState&)>;

// Runs the latent-space genetic search from one seed. `rng` drives every
// mutation and crossover; identical inputs give bit-identical outcomes.
TestOutcome GenerateTest(const SeedSpec& seed, GeneratorModel& generator,
                         ClassifierUnderTest& classifier,
                         const SearchConfig& config, Rng& rng,
                         const IterationObserver& observer = {});

// Convenience overload seeding the search stream from config.rng_seed.
TestOutcome GenerateTest(const SeedSpec& seed, GeneratorModel& generator,
                         ClassifierUnderTest& classifier,
                         const SearchConfig& config);

}  // namespace tig::search

#endif  // TIG_SEARCH_SEARCH_H_
