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

#ifndef TIG_HARNESS_CAMPAIGN_H_
#define TIG_HARNESS_CAMPAIGN_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tig/adapters/registry.h"
#include "tig/core/latent.h"
#include "tig/core/types.h"
#include "tig/harness/config.h"
#include "tig/harness/metrics.h"

namespace tig::harness {

// Latents drawn from the family's seed source for bound estimation:
// encoder means of the first `count` dataset images (vae), or draws from the
// N(0, I) latent prior (gan, dm, toy).
std::vector<LatentVector> BoundSamples(const adapters::AdapterManifest& manifest,
                                       const adapters::AdapterSet& adapters,
                                       std::size_t count, std::uint64_t rng_seed);

struct BoundsEstimate {
  LatentBounds bounds;
  PerturbationSteps steps;
  std::size_t samples = 0;
};

BoundsEstimate EstimateBounds(const adapters::AdapterManifest& manifest,
                              const adapters::AdapterSet& adapters, std::size_t count,
                              std::uint64_t rng_seed);

KeyValueFile ToValues(const BoundsEstimate& estimate);
LatentBounds BoundsFromValues(const KeyValueFile& values);

struct PlannedSeed {
  SeedSpec spec;
  std::optional<std::size_t> dataset_index;
};

// Deterministic seed plan for a campaign (depends only on config and the
// adapters, never on worker count).
std::vector<PlannedSeed> PlanSeeds(const CampaignConfig& config,
                                   const adapters::AdapterManifest& manifest,
                                   const adapters::AdapterSet& adapters);

// Search parameters shared by every seed of a campaign.
struct CampaignSetup {
  SearchConfig search;
  LatentBounds measured_bounds;
  PerturbationSteps steps;
};

CampaignSetup PrepareCampaign(const CampaignConfig& config,
                              const adapters::AdapterManifest& manifest,
                              const adapters::AdapterSet& adapters);

using ProgressFn = std::function<void(const SeedRecord&)>;

// Plans seeds, runs the search on each over a pool of `config.workers`
// threads (one adapter set per worker), persists every record and returns
// the aggregated metrics.
CampaignResult RunCampaign(const CampaignConfig& config, const ProgressFn& progress = {});

}  // namespace tig::harness

#endif  // TIG_HARNESS_CAMPAIGN_H_
