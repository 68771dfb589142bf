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

#ifndef TIG_HARNESS_PERSISTENCE_H_
#define TIG_HARNESS_PERSISTENCE_H_

#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "tig/core/image.h"
#include "tig/core/key_value.h"
#include "tig/core/latent.h"
#include "tig/harness/metrics.h"

namespace tig::harness {

// Run directory layout:
//   manifest             campaign config, bounds, delta_init, completed seeds
//   seed_<k>/outcome     SeedRecord as key-value text
//   seed_<k>/image.png   misclassification-inducing image (found only)
//   seed_<k>/latents.bin seed latent, then best latent when there is one
//   metrics.csv          deterministic metric table
//   timing.csv           wall-clock and decode-time accounting
inline constexpr char kRunManifestName[] = "manifest";
inline constexpr char kOutcomeName[] = "outcome";
inline constexpr char kImageName[] = "image.png";
inline constexpr char kLatentsName[] = "latents.bin";
inline constexpr char kMetricsName[] = "metrics.csv";
inline constexpr char kTimingName[] = "timing.csv";

std::filesystem::path SeedDir(const std::filesystem::path& run_dir, std::size_t seed_index);

KeyValueFile ToValues(const SeedRecord& record);
SeedRecord SeedRecordFromValues(const KeyValueFile& values);

// Writes the seed directory; the outcome file goes last, renamed into
// place, so its presence marks the seed as complete.
void WriteSeedRecord(const std::filesystem::path& run_dir, const SeedRecord& record,
                     const std::optional<Image>& image,
                     std::span<const LatentVector> latents);

std::optional<SeedRecord> ReadSeedRecord(const std::filesystem::path& run_dir,
                                         std::size_t seed_index);

// All completed seed records, ordered by seed index.
std::vector<SeedRecord> LoadSeedRecords(const std::filesystem::path& run_dir);

KeyValueFile LoadRunManifest(const std::filesystem::path& run_dir);

// Re-aggregates a run directory from its persisted records.
CampaignResult LoadCampaignResult(const std::filesystem::path& run_dir);

std::string TimingCsv(const CampaignResult& result);

void WriteTextAtomically(const std::filesystem::path& path, const std::string& text);

}  // namespace tig::harness

#endif  // TIG_HARNESS_PERSISTENCE_H_
