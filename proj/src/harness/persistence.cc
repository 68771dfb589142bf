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

#include "tig/harness/persistence.h"

#include <algorithm>
#include <charconv>
#include <fstream>

#include "tig/adapters/io.h"
#include "tig/core/errors.h"

namespace tig::harness {
namespace {

std::string JoinDoubles(std::span<const double> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += FormatDouble(values[i]);
  }
  return out;
}

std::optional<std::size_t> ParseSeedDirName(const std::string& name) {
  constexpr std::string_view prefix = "seed_";
  if (name.rfind(prefix, 0) != 0) return std::nullopt;
  std::size_t index = 0;
  const char* first = name.data() + prefix.size();
  const char* last = name.data() + name.size();
  auto [end, ec] = std::from_chars(first, last, index);
  if (ec != std::errc() || end != last || first == last) return std::nullopt;
  return index;
}

}  // namespace

std::filesystem::path SeedDir(const std::filesystem::path& run_dir, std::size_t seed_index) {
  return run_dir / ("seed_" + std::to_string(seed_index));
}

void WriteTextAtomically(const std::filesystem::path& path, const std::string& text) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text) || !out.flush()) {
      throw Error(ErrorKind::kIo, "cannot write " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

KeyValueFile ToValues(const SeedRecord& r) {
  KeyValueFile v;
  v.SetInt("seed_index", static_cast<std::int64_t>(r.seed_index));
  v.Set("status", std::string(ToString(r.status)));
  v.Set("family", std::string(ToString(r.family)));
  v.SetInt("expected_label", static_cast<std::int64_t>(r.expected_label));
  if (r.dataset_index) v.SetInt("dataset_index", static_cast<std::int64_t>(*r.dataset_index));
  if (r.prompt) v.Set("prompt", *r.prompt);
  if (r.seed_predicted_label) {
    v.SetInt("seed_predicted_label", static_cast<std::int64_t>(*r.seed_predicted_label));
  }
  if (r.seed_fitness) v.SetDouble("seed_fitness", *r.seed_fitness);
  if (r.predicted_label) {
    v.SetInt("predicted_label", static_cast<std::int64_t>(*r.predicted_label));
  }
  if (r.best_fitness) v.SetDouble("best_fitness", *r.best_fitness);
  v.SetInt("iterations", static_cast<std::int64_t>(r.iterations));
  v.Set("fitness_trace", JoinDoubles(r.fitness_trace));
  v.SetDouble("final_delta", r.final_delta);
  if (!r.error.empty()) {
    std::string error = r.error;
    std::replace(error.begin(), error.end(), '\n', ' ');
    std::replace(error.begin(), error.end(), '#', ' ');
    v.Set("error", error);
  }
  v.SetDouble("wall_seconds", r.wall_seconds);
  v.SetDouble("decode_seconds", r.decode_seconds);
  return v;
}

SeedRecord SeedRecordFromValues(const KeyValueFile& v) {
  SeedRecord r;
  auto index = [&](const std::string& key) {
    const std::int64_t value = v.GetInt(key);
    if (value < 0) throw Error(ErrorKind::kParse, "negative " + key);
    return static_cast<std::size_t>(value);
  };
  r.seed_index = index("seed_index");
  r.status = ParseSeedStatus(v.GetString("status"));
  r.family = ParseModelFamily(v.GetString("family"));
  r.expected_label = index("expected_label");
  if (v.Has("dataset_index")) r.dataset_index = index("dataset_index");
  if (auto p = v.Find("prompt")) r.prompt = *p;
  if (v.Has("seed_predicted_label")) r.seed_predicted_label = index("seed_predicted_label");
  if (v.Has("seed_fitness")) r.seed_fitness = v.GetDouble("seed_fitness");
  if (v.Has("predicted_label")) r.predicted_label = index("predicted_label");
  if (v.Has("best_fitness")) r.best_fitness = v.GetDouble("best_fitness");
  r.iterations = index("iterations");
  if (!v.GetString("fitness_trace", "").empty()) {
    r.fitness_trace = v.GetDoubleList("fitness_trace");
  }
  r.final_delta = v.GetDouble("final_delta");
  r.error = v.GetString("error", "");
  r.wall_seconds = v.GetDouble("wall_seconds", 0.0);
  r.decode_seconds = v.GetDouble("decode_seconds", 0.0);
  return r;
}

void WriteSeedRecord(const std::filesystem::path& run_dir, const SeedRecord& record,
                     const std::optional<Image>& image,
                     std::span<const LatentVector> latents) {
  const std::filesystem::path dir = SeedDir(run_dir, record.seed_index);
  std::filesystem::create_directories(dir);
  std::filesystem::remove(dir / kOutcomeName);
  if (image) adapters::WritePng(dir / kImageName, *image);
  if (!latents.empty()) adapters::WriteLatents(dir / kLatentsName, latents);
  ToValues(record).SaveAtomically(dir / kOutcomeName);
}

std::optional<SeedRecord> ReadSeedRecord(const std::filesystem::path& run_dir,
                                         std::size_t seed_index) {
  const std::filesystem::path path = SeedDir(run_dir, seed_index) / kOutcomeName;
  if (!std::filesystem::exists(path)) return std::nullopt;
  return SeedRecordFromValues(KeyValueFile::Load(path));
}

std::vector<SeedRecord> LoadSeedRecords(const std::filesystem::path& run_dir) {
  if (!std::filesystem::is_directory(run_dir)) {
    throw Error(ErrorKind::kIo, run_dir.string() + " is not a run directory");
  }
  std::vector<SeedRecord> records;
  for (const auto& entry : std::filesystem::directory_iterator(run_dir)) {
    if (!entry.is_directory()) continue;
    const auto index = ParseSeedDirName(entry.path().filename().string());
    if (!index) continue;
    if (auto record = ReadSeedRecord(run_dir, *index)) records.push_back(std::move(*record));
  }
  std::sort(records.begin(), records.end(), [](const SeedRecord& a, const SeedRecord& b) {
    return a.seed_index < b.seed_index;
  });
  return records;
}

KeyValueFile LoadRunManifest(const std::filesystem::path& run_dir) {
  return KeyValueFile::Load(run_dir / kRunManifestName);
}

CampaignResult LoadCampaignResult(const std::filesystem::path& run_dir) {
  const KeyValueFile manifest = LoadRunManifest(run_dir);
  const std::int64_t max_iterations = manifest.GetInt("max_iterations");
  return Aggregate(LoadSeedRecords(run_dir), static_cast<std::size_t>(max_iterations));
}

std::string TimingCsv(const CampaignResult& result) {
  std::string csv = "seed_index,status,iterations,wall_seconds,decode_seconds\n";
  for (const SeedRecord& r : result.records) {
    csv += std::to_string(r.seed_index) + "," + std::string(ToString(r.status)) + "," +
           std::to_string(r.iterations) + "," + FormatDouble(r.wall_seconds) + "," +
           FormatDouble(r.decode_seconds) + "\n";
  }
  csv += "total,,," + FormatDouble(result.wall_seconds) + "," +
         FormatDouble(result.decode_seconds) + "\n";
  return csv;
}

}  // namespace tig::harness
