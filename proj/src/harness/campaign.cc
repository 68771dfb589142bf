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

#include "tig/harness/campaign.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "tig/adapters/io.h"
#include "tig/adapters/seeds.h"
#include "tig/core/errors.h"
#include "tig/core/random.h"
#include "tig/harness/persistence.h"
#include "tig/search/search.h"

namespace tig::harness {
namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Accumulates time spent inside the wrapped generator.
class TimedGenerator : public GeneratorModel {
 public:
  explicit TimedGenerator(GeneratorModel& inner) : inner_(inner) {}

  std::size_t latent_dimension() const override { return inner_.latent_dimension(); }
  ImageShape image_shape() const override { return inner_.image_shape(); }
  bool unit_range_output() const override { return inner_.unit_range_output(); }
  std::vector<Image> DecodeBatch(std::span<const LatentVector> latents,
                                 const DecodeContext& context) override {
    const auto start = Clock::now();
    std::vector<Image> images = inner_.DecodeBatch(latents, context);
    seconds_ += SecondsSince(start);
    return images;
  }

  double seconds() const { return seconds_; }

 private:
  GeneratorModel& inner_;
  double seconds_ = 0.0;
};

adapters::LabelledImages LoadDataset(const adapters::AdapterManifest& manifest) {
  return adapters::ReadIdx(manifest.ResolvePath("dataset_images"),
                           manifest.ResolvePath("dataset_labels"));
}

// Labels seeds cycle through, in order: `seed_classes` names or all classes.
std::vector<ClassIndex> SeedLabels(const adapters::AdapterManifest& manifest) {
  const adapters::ClassMap classes = manifest.classes();
  std::vector<ClassIndex> labels;
  if (auto names = manifest.values().Find("seed_classes")) {
    std::size_t pos = 0;
    while (pos <= names->size()) {
      const std::size_t comma = std::min(names->find(',', pos), names->size());
      std::string name = names->substr(pos, comma - pos);
      name.erase(0, name.find_first_not_of(' '));
      name.erase(name.find_last_not_of(' ') + 1);
      if (!name.empty()) labels.push_back(classes.IndexOf(name));
      pos = comma + 1;
    }
  } else {
    labels.resize(classes.size());
    std::iota(labels.begin(), labels.end(), ClassIndex{0});
  }
  if (labels.empty()) throw Error(ErrorKind::kInvalidInput, "no seed classes");
  return labels;
}

}  // namespace

std::vector<LatentVector> BoundSamples(const adapters::AdapterManifest& manifest,
                                       const adapters::AdapterSet& adapters,
                                       std::size_t count, std::uint64_t rng_seed) {
  std::vector<LatentVector> samples;
  samples.reserve(count);
  if (manifest.family() == ModelFamily::kVae) {
    if (!adapters.encoder) {
      throw Error(ErrorKind::kInvalidInput, "vae manifests need an encoder");
    }
    const adapters::LabelledImages data = LoadDataset(manifest);
    const std::size_t n = std::min(count, data.images.size());
    for (std::size_t i = 0; i < n; ++i) {
      samples.push_back(adapters.encoder->EncodeMean(data.images[i]));
    }
    return samples;
  }
  Rng rng = MakeStream(rng_seed, stream::kBounds, 0);
  for (std::size_t i = 0; i < count; ++i) {
    samples.push_back(adapters::SampleStandardNormal(manifest.latent_dim(), rng));
  }
  return samples;
}

BoundsEstimate EstimateBounds(const adapters::AdapterManifest& manifest,
                              const adapters::AdapterSet& adapters, std::size_t count,
                              std::uint64_t rng_seed) {
  const std::vector<LatentVector> samples = BoundSamples(manifest, adapters, count, rng_seed);
  BoundsEstimate estimate;
  estimate.bounds = EstimateLatentBounds(samples);
  estimate.steps = DerivePerturbationSteps(estimate.bounds);
  estimate.samples = samples.size();
  return estimate;
}

KeyValueFile ToValues(const BoundsEstimate& estimate) {
  KeyValueFile v;
  v.SetDouble("min_value", estimate.bounds.min_value);
  v.SetDouble("max_value", estimate.bounds.max_value);
  v.SetDouble("range", estimate.steps.range);
  v.SetDouble("step_low", estimate.steps.low);
  v.SetDouble("step_high", estimate.steps.high);
  v.SetInt("samples", static_cast<std::int64_t>(estimate.samples));
  return v;
}

LatentBounds BoundsFromValues(const KeyValueFile& values) {
  return LatentBounds::Scalar(values.GetDouble("min_value"), values.GetDouble("max_value"));
}

std::vector<PlannedSeed> PlanSeeds(const CampaignConfig& config,
                                   const adapters::AdapterManifest& manifest,
                                   const adapters::AdapterSet& adapters) {
  std::vector<PlannedSeed> plan;
  plan.reserve(config.n_seeds);
  const std::size_t d = manifest.latent_dim();

  switch (manifest.family()) {
    case ModelFamily::kVae: {
      if (!adapters.encoder) {
        throw Error(ErrorKind::kInvalidInput, "vae manifests need an encoder");
      }
      const adapters::LabelledImages data = LoadDataset(manifest);
      // Bound estimation uses the leading images; seeds come from the rest
      // unless the pools are shared.
      const std::size_t first =
          config.shared_seed_pool ? 0 : std::min(config.bounds_samples, data.images.size());
      std::vector<std::size_t> pool(data.images.size() - first);
      std::iota(pool.begin(), pool.end(), first);
      if (pool.size() < config.n_seeds) {
        throw Error(ErrorKind::kInvalidInput,
                    "dataset has " + std::to_string(pool.size()) +
                        " images available for seeds, campaign needs " +
                        std::to_string(config.n_seeds));
      }
      Rng rng = MakeStream(config.rng_seed, stream::kSeedSampling, 0);
      std::shuffle(pool.begin(), pool.end(), rng);
      for (std::size_t k = 0; k < config.n_seeds; ++k) {
        const std::size_t index = pool[k];
        plan.push_back({adapters::VaeSeed(data.images[index], data.labels[index],
                                          *adapters.encoder),
                        index});
      }
      break;
    }
    case ModelFamily::kGan:
    case ModelFamily::kDm: {
      const std::vector<ClassIndex> labels = SeedLabels(manifest);
      const adapters::ClassMap classes = manifest.classes();
      std::vector<LatentVector> shared;
      if (config.shared_seed_pool) {
        shared = BoundSamples(manifest, adapters, config.bounds_samples, config.rng_seed);
        if (shared.size() < config.n_seeds) {
          throw Error(ErrorKind::kInvalidInput, "shared seed pool is smaller than n_seeds");
        }
      }
      for (std::size_t k = 0; k < config.n_seeds; ++k) {
        const ClassIndex label = labels[k % labels.size()];
        Rng rng = MakeStream(config.rng_seed, stream::kSeedSampling, k);
        SeedSpec spec =
            manifest.family() == ModelFamily::kGan
                ? adapters::GanSeed(label, manifest.num_classes(), d, rng)
                : adapters::DmSeed(classes.Name(label),
                                   manifest.values().GetString("prompt_template"), classes,
                                   d, rng);
        if (config.shared_seed_pool) spec.latent = shared[k];
        plan.push_back({std::move(spec), std::nullopt});
      }
      break;
    }
    case ModelFamily::kToy: {
      const adapters::LinearBoundary boundary = manifest.toy_boundary();
      const adapters::ToySeedRegion region = manifest.toy_seed_region();
      for (std::size_t k = 0; k < config.n_seeds; ++k) {
        Rng rng = MakeStream(config.rng_seed, stream::kSeedSampling, k);
        plan.push_back({adapters::ToySeed(boundary, region, rng), std::nullopt});
      }
      break;
    }
  }
  return plan;
}

CampaignSetup PrepareCampaign(const CampaignConfig& config,
                              const adapters::AdapterManifest& manifest,
                              const adapters::AdapterSet& adapters) {
  CampaignSetup setup;
  if (config.bounds_file) {
    setup.measured_bounds = BoundsFromValues(KeyValueFile::Load(*config.bounds_file));
  } else {
    setup.measured_bounds =
        EstimateBounds(manifest, adapters, config.bounds_samples, config.rng_seed).bounds;
  }
  setup.steps = DerivePerturbationSteps(setup.measured_bounds);

  setup.search.pop_size = config.pop_size;
  setup.search.tshd_best = config.tshd_best;
  setup.search.max_iterations = config.max_iterations;
  setup.search.rng_seed = config.rng_seed;
  setup.search.delta_init = config.delta_init.value_or(StepFor(setup.steps, config.step_mode));
  setup.search.bounds = config.clamp_min
                            ? LatentBounds::Scalar(*config.clamp_min, *config.clamp_max)
                            : setup.measured_bounds;
  setup.search.Validate();
  return setup;
}

CampaignResult RunCampaign(const CampaignConfig& config, const ProgressFn& progress) {
  config.Validate();
  const adapters::AdapterManifest manifest = adapters::AdapterManifest::Load(config.manifest_path);
  adapters::AdapterSet primary = adapters::LoadAdapters(manifest);
  const CampaignSetup setup = PrepareCampaign(config, manifest, primary);
  const std::vector<PlannedSeed> plan = PlanSeeds(config, manifest, primary);

  const std::filesystem::path& run_dir = config.output_dir;
  std::filesystem::create_directories(run_dir);

  KeyValueFile run_manifest = config.ToValues();
  run_manifest.Set("family", std::string(ToString(manifest.family())));
  run_manifest.SetDouble("measured_min", setup.measured_bounds.min_value);
  run_manifest.SetDouble("measured_max", setup.measured_bounds.max_value);
  run_manifest.SetDouble("clamp_min_effective", setup.search.bounds.min_value);
  run_manifest.SetDouble("clamp_max_effective", setup.search.bounds.max_value);
  run_manifest.SetDouble("delta_init_effective", setup.search.delta_init);
  run_manifest.SetInt("latent_dim", static_cast<std::int64_t>(manifest.latent_dim()));
  run_manifest.SetInt("num_classes", static_cast<std::int64_t>(manifest.num_classes()));

  std::vector<std::optional<SeedRecord>> records(plan.size());
  std::set<std::size_t> completed;
  const std::filesystem::path manifest_path = run_dir / kRunManifestName;
  if (config.resume && std::filesystem::exists(manifest_path)) {
    const KeyValueFile previous = KeyValueFile::Load(manifest_path);
    const CampaignConfig old = CampaignConfig::FromValues(previous, {});
    if (old.Fingerprint() != config.Fingerprint()) {
      throw Error(ErrorKind::kInvalidState,
                  "cannot resume: run directory was produced by a different config");
    }
    for (std::size_t k = 0; k < plan.size(); ++k) {
      auto record = ReadSeedRecord(run_dir, k);
      if (record && record->status != SeedStatus::kErrored) {
        records[k] = std::move(record);
        completed.insert(k);
      }
    }
  } else {
    for (const auto& entry : std::filesystem::directory_iterator(run_dir)) {
      const std::string name = entry.path().filename().string();
      if (entry.is_directory() && name.rfind("seed_", 0) == 0) {
        std::filesystem::remove_all(entry.path());
      }
    }
  }

  std::mutex mutex;
  auto save_manifest = [&] {
    std::string list;
    for (std::size_t k : completed) {
      if (!list.empty()) list += ',';
      list += std::to_string(k);
    }
    KeyValueFile v = run_manifest;
    v.Set("completed_seeds", list);
    v.SaveAtomically(manifest_path);
  };
  save_manifest();

  std::atomic<std::size_t> next{0};
  auto worker = [&](adapters::AdapterSet adapters) {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= plan.size()) return;
      if (records[k]) continue;
      const PlannedSeed& planned = plan[k];
      SeedRecord record;
      record.seed_index = k;
      record.family = planned.spec.family;
      record.expected_label = planned.spec.expected_label;
      record.dataset_index = planned.dataset_index;
      record.prompt = planned.spec.prompt;

      TimedGenerator timed(*adapters.generator);
      Rng rng = MakeStream(config.rng_seed, stream::kSearch, k);
      const auto start = Clock::now();
      std::optional<Image> image;
      std::vector<LatentVector> latents{planned.spec.latent};
      try {
        search::TestOutcome outcome = search::GenerateTest(
            planned.spec, timed, *adapters.classifier, setup.search, rng);
        record.status = FromOutcome(outcome.status);
        record.seed_predicted_label = outcome.seed_predicted_label;
        record.seed_fitness = outcome.seed_fitness;
        record.predicted_label = outcome.predicted_label;
        record.best_fitness = outcome.best_fitness;
        record.iterations = outcome.iterations;
        record.fitness_trace = std::move(outcome.fitness_trace);
        record.final_delta = outcome.final_delta;
        image = std::move(outcome.image);
        if (outcome.best_latent) latents.push_back(*outcome.best_latent);
      } catch (const std::exception& e) {
        record.status = SeedStatus::kErrored;
        record.error = e.what();
      }
      record.wall_seconds = SecondsSince(start);
      record.decode_seconds = timed.seconds();
      WriteSeedRecord(run_dir, record, image, latents);

      std::lock_guard lock(mutex);
      completed.insert(k);
      save_manifest();
      if (progress) progress(record);
      records[k] = std::move(record);
    }
  };

  const std::size_t workers = std::min(config.workers, std::max<std::size_t>(plan.size(), 1));
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> failures(workers);
  for (std::size_t w = 1; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        worker(adapters::LoadAdapters(manifest));
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  try {
    worker(primary);
  } catch (...) {
    failures[0] = std::current_exception();
  }
  for (std::thread& t : threads) t.join();
  for (const std::exception_ptr& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<SeedRecord> ordered;
  ordered.reserve(records.size());
  for (auto& record : records) ordered.push_back(std::move(*record));
  CampaignResult result = Aggregate(std::move(ordered), config.max_iterations);
  WriteTextAtomically(run_dir / kMetricsName, MetricsCsv(result));
  WriteTextAtomically(run_dir / kTimingName, TimingCsv(result));
  return result;
}

}  // namespace tig::harness
