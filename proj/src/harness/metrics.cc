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

#include "tig/harness/metrics.h"

#include <cmath>
#include <numeric>

#include "tig/core/errors.h"
#include "tig/core/key_value.h"

namespace tig::harness {
namespace {

bool Accepted(const SeedRecord& r) {
  return r.status == SeedStatus::kMisclassificationFound ||
         r.status == SeedStatus::kBudgetExhausted;
}

Table2x2 Rows(std::size_t success1, std::size_t total1, std::size_t success2,
              std::size_t total2) {
  return {success1, total1 - success1, success2, total2 - success2};
}

const HumanMetrics& RequireHuman(const CampaignResult& r) {
  if (!r.human) {
    throw Error(ErrorKind::kInvalidState, "campaign has no human assessment attached");
  }
  return *r.human;
}

}  // namespace

std::string_view ToString(SeedStatus status) {
  switch (status) {
    case SeedStatus::kSeedRejected: return "seed_rejected";
    case SeedStatus::kMisclassificationFound: return "misclassification_found";
    case SeedStatus::kBudgetExhausted: return "budget_exhausted";
    case SeedStatus::kErrored: return "errored";
  }
  return "unknown";
}

SeedStatus ParseSeedStatus(std::string_view text) {
  if (text == "errored") return SeedStatus::kErrored;
  return FromOutcome(search::ParseOutcomeStatus(text));
}

SeedStatus FromOutcome(search::OutcomeStatus status) {
  switch (status) {
    case search::OutcomeStatus::kSeedRejected: return SeedStatus::kSeedRejected;
    case search::OutcomeStatus::kMisclassificationFound:
      return SeedStatus::kMisclassificationFound;
    case search::OutcomeStatus::kBudgetExhausted: return SeedStatus::kBudgetExhausted;
  }
  return SeedStatus::kErrored;
}

double Rq1SeedRatio(std::span<const SeedRecord> records) {
  std::size_t n = 0, rejected = 0;
  for (const SeedRecord& r : records) {
    if (r.status == SeedStatus::kErrored) continue;
    ++n;
    if (r.status == SeedStatus::kSeedRejected) ++rejected;
  }
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "no seed outcomes");
  return static_cast<double>(n - rejected) / static_cast<double>(n);
}

std::pair<std::size_t, double> Rq2Misclassification(std::span<const SeedRecord> records) {
  std::size_t accepted = 0, found = 0;
  for (const SeedRecord& r : records) {
    if (!Accepted(r)) continue;
    ++accepted;
    if (r.status == SeedStatus::kMisclassificationFound) ++found;
  }
  if (accepted == 0) {
    throw Error(ErrorKind::kUndefinedRatio, "no correctly classified seeds");
  }
  return {found, static_cast<double>(found) / static_cast<double>(accepted)};
}

std::vector<double> Rq3Samples(std::span<const SeedRecord> records,
                               std::size_t max_iterations) {
  std::vector<double> samples;
  for (const SeedRecord& r : records) {
    if (r.status == SeedStatus::kMisclassificationFound) {
      samples.push_back(static_cast<double>(r.iterations));
    } else if (r.status == SeedStatus::kBudgetExhausted) {
      samples.push_back(static_cast<double>(max_iterations));
    }
  }
  return samples;
}

double Rq3MeanIterations(std::span<const SeedRecord> records, std::size_t max_iterations) {
  const std::vector<double> samples = Rq3Samples(records, max_iterations);
  if (samples.empty()) {
    throw Error(ErrorKind::kUndefinedRatio, "no correctly classified seeds");
  }
  return std::accumulate(samples.begin(), samples.end(), 0.0) /
         static_cast<double>(samples.size());
}

CampaignResult Aggregate(std::vector<SeedRecord> records, std::size_t max_iterations) {
  CampaignResult result;
  result.max_iterations = max_iterations;
  for (const SeedRecord& r : records) {
    switch (r.status) {
      case SeedStatus::kErrored: ++result.n_errored; break;
      case SeedStatus::kSeedRejected: ++result.n_rejected; break;
      case SeedStatus::kMisclassificationFound: ++result.n_found; break;
      case SeedStatus::kBudgetExhausted: ++result.n_exhausted; break;
    }
    result.wall_seconds += r.wall_seconds;
    result.decode_seconds += r.decode_seconds;
  }
  result.n_seeds = records.size() - result.n_errored;
  if (result.n_seeds > 0) result.rq1_ratio = Rq1SeedRatio(records);
  result.rq2_count = result.n_found;
  if (result.n_found + result.n_exhausted > 0) {
    result.rq2_ratio = Rq2Misclassification(records).second;
    result.rq3_mean_iterations = Rq3MeanIterations(records, max_iterations);
  }
  result.records = std::move(records);
  return result;
}

std::string MetricsCsv(const CampaignResult& r) {
  auto optional = [](const std::optional<double>& v) {
    return v ? FormatDouble(*v) : std::string("undefined");
  };
  std::string csv = "metric,value\n";
  auto row = [&](const std::string& key, const std::string& value) {
    csv += key + "," + value + "\n";
  };
  row("n_seeds", std::to_string(r.n_seeds));
  row("n_errored", std::to_string(r.n_errored));
  row("n_seed_rejected", std::to_string(r.n_rejected));
  row("n_misclassification_found", std::to_string(r.n_found));
  row("n_budget_exhausted", std::to_string(r.n_exhausted));
  row("max_iterations", std::to_string(r.max_iterations));
  row("rq1_ratio", FormatDouble(r.rq1_ratio));
  row("rq2_count", std::to_string(r.rq2_count));
  row("rq2_ratio", optional(r.rq2_ratio));
  row("rq3_mean_iterations", optional(r.rq3_mean_iterations));
  if (r.human) {
    row("rq4_count", std::to_string(r.human->valid_count));
    row("rq5_count", std::to_string(r.human->preserved_count));
  }
  return csv;
}

Metric ParseMetric(std::string_view text) {
  if (text == "rq1") return Metric::kRq1;
  if (text == "rq2") return Metric::kRq2;
  if (text == "rq3") return Metric::kRq3;
  if (text == "rq4") return Metric::kRq4;
  if (text == "rq5") return Metric::kRq5;
  throw Error(ErrorKind::kParse, "unknown metric '" + std::string(text) + "'");
}

std::string_view ToString(Metric metric) {
  switch (metric) {
    case Metric::kRq1: return "rq1";
    case Metric::kRq2: return "rq2";
    case Metric::kRq3: return "rq3";
    case Metric::kRq4: return "rq4";
    case Metric::kRq5: return "rq5";
  }
  return "unknown";
}

StatReport CompareCampaigns(const CampaignResult& r1, const CampaignResult& r2,
                            Metric metric) {
  StatReport report;
  report.metric = metric;
  if (metric == Metric::kRq3) {
    const std::vector<double> a = Rq3Samples(r1.records, r1.max_iterations);
    const std::vector<double> b = Rq3Samples(r2.records, r2.max_iterations);
    const MannWhitneyResult mw = MannWhitneyU(a, b);
    report.mw_u = mw.u;
    report.mw_p = mw.p_value;
    report.cohens_d = CohensD(a, b);
    report.significant = mw.p_value < kAlpha && std::abs(*report.cohens_d) >= kSmallEffect;
    return report;
  }

  Table2x2 table;
  switch (metric) {
    case Metric::kRq1:
      table = Rows(r1.n_seeds - r1.n_rejected, r1.n_seeds, r2.n_seeds - r2.n_rejected,
                   r2.n_seeds);
      break;
    case Metric::kRq2:
      table = Rows(r1.n_found, r1.n_found + r1.n_exhausted, r2.n_found,
                   r2.n_found + r2.n_exhausted);
      break;
    case Metric::kRq4: {
      const HumanMetrics& h1 = RequireHuman(r1);
      const HumanMetrics& h2 = RequireHuman(r2);
      table = Rows(h1.valid_count, h1.misclassification_count, h2.valid_count,
                   h2.misclassification_count);
      break;
    }
    case Metric::kRq5: {
      const HumanMetrics& h1 = RequireHuman(r1);
      const HumanMetrics& h2 = RequireHuman(r2);
      table = Rows(h1.preserved_count, h1.valid_count, h2.preserved_count, h2.valid_count);
      break;
    }
    case Metric::kRq3: break;
  }
  const FisherResult fisher = FisherExact(table);
  report.table = table;
  report.fisher_p = fisher.p_value;
  report.odds_ratio = fisher.odds_ratio;
  const bool non_negligible = !std::isnan(fisher.odds_ratio) &&
                              (fisher.odds_ratio < kOddsNeutralLow ||
                               fisher.odds_ratio > kOddsNeutralHigh);
  report.significant = !fisher.degenerate && fisher.p_value < kAlpha && non_negligible;
  return report;
}

}  // namespace tig::harness
