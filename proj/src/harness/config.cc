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

#include "tig/harness/config.h"

#include "tig/core/errors.h"

namespace tig::harness {
namespace {

std::filesystem::path Resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  return (path.is_absolute() ? path : base / path).lexically_normal();
}

std::size_t ReadCount(const KeyValueFile& v, const std::string& key, std::size_t fallback) {
  const std::int64_t value = v.GetInt(key, static_cast<std::int64_t>(fallback));
  if (value < 0) throw Error(ErrorKind::kParse, "'" + key + "' must be non-negative");
  return static_cast<std::size_t>(value);
}

}  // namespace

StepMode ParseStepMode(const std::string& text) {
  if (text == "low") return StepMode::kLow;
  if (text == "high") return StepMode::kHigh;
  throw Error(ErrorKind::kParse, "step_mode must be low or high, got '" + text + "'");
}

std::string ToString(StepMode mode) { return mode == StepMode::kLow ? "low" : "high"; }

CampaignConfig CampaignConfig::Load(const std::filesystem::path& path) {
  return FromValues(KeyValueFile::Load(path), path.parent_path());
}

CampaignConfig CampaignConfig::FromValues(const KeyValueFile& v,
                                          const std::filesystem::path& base_dir) {
  CampaignConfig c;
  c.task = v.GetString("task");
  c.manifest_path = Resolve(base_dir, v.GetString("manifest"));
  c.output_dir = Resolve(base_dir, v.GetString("output_dir"));
  c.n_seeds = ReadCount(v, "n_seeds", c.n_seeds);
  c.pop_size = ReadCount(v, "pop_size", c.pop_size);
  c.tshd_best = ReadCount(v, "tshd_best", c.tshd_best);
  c.max_iterations = ReadCount(v, "max_iterations", c.max_iterations);
  c.step_mode = ParseStepMode(v.GetString("step_mode", "high"));
  c.rng_seed = v.GetUint("rng_seed", 0);
  c.workers = ReadCount(v, "workers", c.workers);
  c.bounds_samples = ReadCount(v, "bounds_samples", c.bounds_samples);
  c.shared_seed_pool = v.GetBool("shared_seed_pool", false);
  if (auto f = v.Find("bounds_file")) c.bounds_file = Resolve(base_dir, *f);
  if (v.Has("clamp_min")) c.clamp_min = v.GetDouble("clamp_min");
  if (v.Has("clamp_max")) c.clamp_max = v.GetDouble("clamp_max");
  if (v.Has("delta_init")) c.delta_init = v.GetDouble("delta_init");
  c.resume = v.GetBool("resume", false);
  c.Validate();
  return c;
}

void CampaignConfig::Validate() const {
  if (task.empty()) throw Error(ErrorKind::kInvalidArgument, "task must be set");
  if (n_seeds < 1) throw Error(ErrorKind::kInvalidArgument, "n_seeds must be >= 1");
  if (workers < 1) throw Error(ErrorKind::kInvalidArgument, "workers must be >= 1");
  if (bounds_samples < 1) {
    throw Error(ErrorKind::kInvalidArgument, "bounds_samples must be >= 1");
  }
  if (clamp_min.has_value() != clamp_max.has_value()) {
    throw Error(ErrorKind::kInvalidArgument, "clamp_min and clamp_max go together");
  }
  if (clamp_min && *clamp_min > *clamp_max) {
    throw Error(ErrorKind::kInvalidArgument, "clamp_min exceeds clamp_max");
  }
  if (delta_init && !(*delta_init > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "delta_init must be positive");
  }
}

KeyValueFile CampaignConfig::ToValues() const {
  KeyValueFile v;
  v.Set("task", task);
  v.Set("manifest", manifest_path.string());
  v.Set("output_dir", output_dir.string());
  v.SetInt("n_seeds", static_cast<std::int64_t>(n_seeds));
  v.SetInt("pop_size", static_cast<std::int64_t>(pop_size));
  v.SetInt("tshd_best", static_cast<std::int64_t>(tshd_best));
  v.SetInt("max_iterations", static_cast<std::int64_t>(max_iterations));
  v.Set("step_mode", ToString(step_mode));
  v.Set("rng_seed", std::to_string(rng_seed));
  v.SetInt("workers", static_cast<std::int64_t>(workers));
  v.SetInt("bounds_samples", static_cast<std::int64_t>(bounds_samples));
  v.Set("shared_seed_pool", shared_seed_pool ? "true" : "false");
  if (bounds_file) v.Set("bounds_file", bounds_file->string());
  if (clamp_min) v.SetDouble("clamp_min", *clamp_min);
  if (clamp_max) v.SetDouble("clamp_max", *clamp_max);
  if (delta_init) v.SetDouble("delta_init", *delta_init);
  v.Set("resume", resume ? "true" : "false");
  return v;
}

std::string CampaignConfig::Fingerprint() const {
  KeyValueFile v = ToValues();
  KeyValueFile relevant;
  for (const auto& [key, value] : v.entries()) {
    if (key == "workers" || key == "resume" || key == "output_dir") continue;
    relevant.Set(key, value);
  }
  return relevant.Serialize();
}

}  // namespace tig::harness
