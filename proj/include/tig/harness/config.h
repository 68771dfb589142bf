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

#ifndef TIG_HARNESS_CONFIG_H_
#define TIG_HARNESS_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "tig/core/key_value.h"
#include "tig/core/latent.h"

namespace tig::harness {

// Campaign configuration, read from a key-value file. Keys (defaults):
//
//   task              dataset/task id, e.g. mnist (required)
//   manifest          adapter manifest path (required)
//   output_dir        run directory (required)
//   n_seeds           100
//   pop_size          25
//   tshd_best         10
//   max_iterations    250
//   step_mode         low | high (high)
//   rng_seed          0
//   workers           1
//   bounds_samples    1000
//   shared_seed_pool  false   draw seeds from the bound-estimation pool
//   bounds_file       optional precomputed bounds (from `tig bounds`)
//   clamp_min, clamp_max   optional clamp range overriding measured bounds
//   delta_init        optional explicit step overriding step_mode
//   resume            false   reuse completed seed records in output_dir
//
// Relative paths resolve against the config file's directory.
struct CampaignConfig {
  std::string task;
  std::filesystem::path manifest_path;
  std::filesystem::path output_dir;
  std::size_t n_seeds = 100;
  std::size_t pop_size = 25;
  std::size_t tshd_best = 10;
  std::size_t max_iterations = 250;
  StepMode step_mode = StepMode::kHigh;
  std::uint64_t rng_seed = 0;
  std::size_t workers = 1;
  std::size_t bounds_samples = 1000;
  bool shared_seed_pool = false;
  std::optional<std::filesystem::path> bounds_file;
  std::optional<double> clamp_min;
  std::optional<double> clamp_max;
  std::optional<double> delta_init;
  bool resume = false;

  static CampaignConfig Load(const std::filesystem::path& path);
  static CampaignConfig FromValues(const KeyValueFile& values,
                                   const std::filesystem::path& base_dir);

  void Validate() const;
  // Canonical form; paths are written as given after resolution.
  KeyValueFile ToValues() const;
  // Fields that determine results (everything but workers/resume/output_dir).
  std::string Fingerprint() const;
};

StepMode ParseStepMode(const std::string& text);
std::string ToString(StepMode mode);

}  // namespace tig::harness

#endif  // TIG_HARNESS_CONFIG_H_
