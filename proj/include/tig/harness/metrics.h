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

#ifndef TIG_HARNESS_METRICS_H_
#define TIG_HARNESS_METRICS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tig/core/types.h"
#include "tig/harness/stats.h"
#include "tig/search/search.h"

namespace tig::harness {

enum class SeedStatus { kSeedRejected, kMisclassificationFound, kBudgetExhausted, kErrored };

std::string_view ToString(SeedStatus status);
SeedStatus ParseSeedStatus(std::string_view text);
SeedStatus FromOutcome(search::OutcomeStatus status);

// Everything persisted about one seed run.
struct SeedRecord {
  std::size_t seed_index = 0;
  SeedStatus status = SeedStatus::kErrored;
  ModelFamily family = ModelFamily::kToy;
  ClassIndex expected_label = 0;
  std::optional<std::size_t> dataset_index;
  std::optional<std::string> prompt;
  std::optional<ClassIndex> seed_predicted_label;
  std::optional<double> seed_fitness;
  std::optional<ClassIndex> predicted_label;
  std::optional<double> best_fitness;
  std::size_t iterations = 0;
  std::vector<double> fitness_trace;
  double final_delta = 0.0;
  std::string error;
  double wall_seconds = 0.0;
  double decode_seconds = 0.0;

  friend bool operator==(const SeedRecord&, const SeedRecord&) = default;
};

// Human-assessment counts attached to a campaign (RQ4/RQ5).
struct HumanMetrics {
  std::size_t misclassification_count = 0;
  std::size_t valid_count = 0;
  std::size_t preserved_count = 0;

  friend bool operator==(const HumanMetrics&, const HumanMetrics&) = default;
};

struct CampaignResult {
  std::vector<SeedRecord> records;
  std::size_t max_iterations = 0;
  std::size_t n_seeds = 0;  // seeds that ran to an outcome (errored excluded)
  std::size_t n_errored = 0;
  std::size_t n_rejected = 0;
  std::size_t n_found = 0;
  std::size_t n_exhausted = 0;
  double rq1_ratio = 0.0;
  std::size_t rq2_count = 0;
  std::optional<double> rq2_ratio;            // undefined without accepted seeds
  std::optional<double> rq3_mean_iterations;  // undefined without accepted seeds
  double wall_seconds = 0.0;
  double decode_seconds = 0.0;
  std::optional<HumanMetrics> human;

  friend bool operator==(const CampaignResult&, const CampaignResult&) = default;
};

// (n - #rejected) / n over non-errored records.
double Rq1SeedRatio(std::span<const SeedRecord> records);

// (#found, #found / #accepted); throws kUndefinedRatio when nothing was
// accepted.
std::pair<std::size_t, double> Rq2Misclassification(std::span<const SeedRecord> records);

// Mean iterations over accepted seeds, N standing in for exhausted runs.
double Rq3MeanIterations(std::span<const SeedRecord> records, std::size_t max_iterations);

// Iteration counts of accepted seeds, in seed order (the RQ3 sample).
std::vector<double> Rq3Samples(std::span<const SeedRecord> records,
                               std::size_t max_iterations);

CampaignResult Aggregate(std::vector<SeedRecord> records, std::size_t max_iterations);

// Deterministic metric table (no timings): `metric,value` rows.
std::string MetricsCsv(const CampaignResult& result);

enum class Metric { kRq1, kRq2, kRq3, kRq4, kRq5 };
Metric ParseMetric(std::string_view text);
std::string_view ToString(Metric metric);

// Effect-size thresholds for "non-negligible".
inline constexpr double kSmallEffect = 0.2;
inline constexpr double kOddsNeutralLow = 0.83;
inline constexpr double kOddsNeutralHigh = 1.2;
inline constexpr double kAlpha = 0.05;

struct StatReport {
  Metric metric = Metric::kRq1;
  std::optional<Table2x2> table;
  std::optional<double> fisher_p;
  std::optional<double> odds_ratio;
  std::optional<double> mw_u;
  std::optional<double> mw_p;
  std::optional<double> cohens_d;
  bool significant = false;
};

// Binary-ratio metrics go through Fisher's exact test on success/failure
// counts (rows: r1, r2); RQ3 goes through Mann-Whitney U plus Cohen's d.
StatReport CompareCampaigns(const CampaignResult& r1, const CampaignResult& r2, Metric metric);

}  // namespace tig::harness

#endif  // TIG_HARNESS_METRICS_H_
