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

#include "tig/search/search.h"

#include <algorithm>
#include <string>
#include <utility>

#include "tig/adapters/decode.h"
#include "tig/core/errors.h"
#include "tig/fitness/fitness.h"
#include "tig/genetic/operators.h"
#include "tig/genetic/step_controller.h"

namespace tig::search {
namespace {

// Decodes and scores every individual that has no cached evaluation.
void EvaluatePending(std::vector<Individual>& population, GeneratorModel& generator,
                     ClassifierUnderTest& classifier, const DecodeContext& context,
                     ClassIndex expected) {
  std::vector<std::size_t> pending;
  std::vector<LatentVector> latents;
  for (std::size_t i = 0; i < population.size(); ++i) {
    if (!population[i].evaluated()) {
      pending.push_back(i);
      latents.push_back(population[i].latent);
    }
  }
  if (pending.empty()) return;
  std::vector<Image> images = adapters::Decode(generator, latents, context);
  std::vector<fitness::EvaluationResult> results =
      fitness::EvaluatePopulation(images, classifier, expected);
  for (std::size_t k = 0; k < pending.size(); ++k) {
    Individual& individual = population[pending[k]];
    individual.image = std::move(images[k]);
    individual.predicted_label = results[k].predicted_label;
    individual.fitness = results[k].fitness;
  }
}

}  // namespace

std::string_view ToString(OutcomeStatus status) {
  switch (status) {
    case OutcomeStatus::kSeedRejected: return "seed_rejected";
    case OutcomeStatus::kMisclassificationFound: return "misclassification_found";
    case OutcomeStatus::kBudgetExhausted: return "budget_exhausted";
  }
  return "unknown";
}

OutcomeStatus ParseOutcomeStatus(std::string_view text) {
  if (text == "seed_rejected") return OutcomeStatus::kSeedRejected;
  if (text == "misclassification_found") return OutcomeStatus::kMisclassificationFound;
  if (text == "budget_exhausted") return OutcomeStatus::kBudgetExhausted;
  throw Error(ErrorKind::kParse, "unknown outcome status '" + std::string(text) + "'");
}

TestOutcome GenerateTest(const SeedSpec& seed, GeneratorModel& generator,
                         ClassifierUnderTest& classifier,
                         const SearchConfig& config, Rng& rng,
                         const IterationObserver& observer) {
  config.Validate();
  seed.Validate();
  if (seed.latent.dimension() != generator.latent_dimension()) {
    throw Error(ErrorKind::kInvalidArgument,
                "seed dimension does not match the generator");
  }

  TestOutcome outcome;
  outcome.final_delta = config.delta_init;

  const LatentVector seed_latent[] = {seed.latent};
  const std::vector<Image> seed_image = adapters::Decode(
      generator, seed_latent, DecodeContext::ForSeed(seed, DecodePhase::kSeed));
  const fitness::EvaluationResult seed_eval =
      fitness::EvaluatePopulation(seed_image, classifier, seed.expected_label).front();
  outcome.seed_predicted_label = seed_eval.predicted_label;
  outcome.seed_fitness = seed_eval.fitness;
  if (seed_eval.predicted_label != seed.expected_label) {
    outcome.status = OutcomeStatus::kSeedRejected;
    return outcome;
  }

  genetic::StepController step =
      genetic::StepController::Start(config.delta_init, seed_eval.fitness);

  // The initial mutants are not clamped.
  std::vector<Individual> population;
  population.reserve(config.pop_size);
  for (std::size_t i = 0; i < config.pop_size; ++i) {
    population.emplace_back(genetic::Mutate(seed.latent, step.delta, rng));
  }

  const DecodeContext mutation_context =
      DecodeContext::ForSeed(seed, DecodePhase::kMutation);
  const std::size_t offspring_count = config.pop_size - config.tshd_best;

  for (std::size_t iter = 0; iter < config.max_iterations; ++iter) {
    EvaluatePending(population, generator, classifier, mutation_context,
                    seed.expected_label);
    std::vector<Individual> elites = genetic::Select(population, config.tshd_best);
    const double f_min = *elites.front().fitness;
    outcome.fitness_trace.push_back(f_min);

    if (f_min < 0.0) {
      Individual& best = elites.front();
      outcome.status = OutcomeStatus::kMisclassificationFound;
      outcome.iterations = iter + 1;
      outcome.image = std::move(best.image);
      outcome.best_latent = best.latent;
      outcome.predicted_label = best.predicted_label;
      outcome.best_fitness = best.fitness;
      outcome.final_delta = step.delta;
      if (observer) {
        observer({iter + 1, population.size(), elites.size(), 0, f_min, step.delta});
      }
      return outcome;
    }

    step = genetic::AdaptStep(step, f_min);
    std::vector<LatentVector> offspring;
    if (offspring_count > 0) {
      offspring = genetic::MakeOffspring(elites, offspring_count, step.delta,
                                         config.bounds, rng);
    }
    if (observer) {
      observer({iter + 1, population.size(), elites.size(), offspring.size(), f_min,
                step.delta});
    }

    population = std::move(elites);
    for (LatentVector& child : offspring) population.emplace_back(std::move(child));
    outcome.best_latent = population.front().latent;
    outcome.best_fitness = population.front().fitness;
  }

  outcome.status = OutcomeStatus::kBudgetExhausted;
  outcome.iterations = config.max_iterations;
  outcome.final_delta = step.delta;
  return outcome;
}

TestOutcome GenerateTest(const SeedSpec& seed, GeneratorModel& generator,
                         ClassifierUnderTest& classifier,
                         const SearchConfig& config) {
  Rng rng = MakeStream(config.rng_seed, stream::kSearch, 0);
  return GenerateTest(seed, generator, classifier, config, rng);
}

}  // namespace tig::search
