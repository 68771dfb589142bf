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

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "fakes.h"
#include "tig/adapters/io.h"
#include "tig/core/key_value.h"
#include "tig/harness/campaign.h"
#include "tig/harness/config.h"
#include "tig/harness/metrics.h"
#include "tig/harness/persistence.h"
#include "tig/harness/report.h"

namespace tig::harness {
namespace {

using testing::ExpectKind;
using testing::TempDir;

SeedRecord Rec(std::size_t k, SeedStatus status, std::size_t iterations = 0) {
  SeedRecord r;
  r.seed_index = k;
  r.status = status;
  r.iterations = iterations;
  return r;
}

std::vector<SeedRecord> Records(std::size_t rejected, std::size_t found, std::size_t exhausted) {
  std::vector<SeedRecord> out;
  for (std::size_t i = 0; i < rejected; ++i) out.push_back(Rec(out.size(), SeedStatus::kSeedRejected));
  for (std::size_t i = 0; i < found; ++i) out.push_back(Rec(out.size(), SeedStatus::kMisclassificationFound, 5));
  for (std::size_t i = 0; i < exhausted; ++i) out.push_back(Rec(out.size(), SeedStatus::kBudgetExhausted, 250));
  return out;
}

std::string ReadText(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// A toy campaign config in `dir`.
CampaignConfig ToyCampaign(const TempDir& dir, std::size_t n_seeds = 30) {
  CampaignConfig c;
  c.task = "toy";
  c.manifest_path = TIG_MODELS_DIR "/toy/manifest";
  c.output_dir = dir / "run";
  c.n_seeds = n_seeds;
  c.rng_seed = 5;
  c.clamp_min = -1;
  c.clamp_max = 1;
  return c;
}

TEST(Metrics, Rq1) {
  EXPECT_DOUBLE_EQ(Rq1SeedRatio(Records(34, 60, 6)), 0.66);
  EXPECT_EQ(Rq1SeedRatio(Records(0, 3, 1)), 1.0);
  EXPECT_EQ(Rq1SeedRatio(Records(5, 0, 0)), 0.0);
  ExpectKind(ErrorKind::kInvalidArgument, [] { Rq1SeedRatio({}); });
}

TEST(Metrics, Rq2) {
  const auto [count, ratio] = Rq2Misclassification(Records(34, 64, 2));
  EXPECT_EQ(count, 64u);
  EXPECT_NEAR(ratio, 0.9697, 5e-5);
  ExpectKind(ErrorKind::kUndefinedRatio, [] { Rq2Misclassification(Records(4, 0, 0)); });
  EXPECT_EQ(Rq2Misclassification(Records(1, 7, 0)).second, 1.0);
}

TEST(Metrics, Rq3) {
  std::vector<SeedRecord> r = {Rec(0, SeedStatus::kMisclassificationFound, 3),
                               Rec(1, SeedStatus::kBudgetExhausted, 250),
                               Rec(2, SeedStatus::kMisclassificationFound, 7),
                               Rec(3, SeedStatus::kSeedRejected, 0)};
  EXPECT_NEAR(Rq3MeanIterations(r, 250), 260.0 / 3.0, 1e-12);
  std::vector<SeedRecord> ones = {Rec(0, SeedStatus::kMisclassificationFound, 1),
                                  Rec(1, SeedStatus::kMisclassificationFound, 1)};
  EXPECT_EQ(Rq3MeanIterations(ones, 250), 1.0);
  EXPECT_EQ(Rq3MeanIterations(Records(0, 0, 4), 250), 250.0);
}

TEST(Metrics, AggregateExcludesErroredAndBalances) {
  std::vector<SeedRecord> r = Records(2, 5, 3);
  r.push_back(Rec(r.size(), SeedStatus::kErrored));
  const CampaignResult res = Aggregate(r, 250);
  EXPECT_EQ(res.n_seeds, 10u);
  EXPECT_EQ(res.n_errored, 1u);
  EXPECT_EQ(res.n_found + res.n_exhausted + res.n_rejected, res.n_seeds);
  EXPECT_DOUBLE_EQ(res.rq1_ratio, 0.8);
  EXPECT_EQ(res.rq2_count, 5u);
  EXPECT_LE(res.rq2_count, res.n_seeds - res.n_rejected);
  EXPECT_DOUBLE_EQ(*res.rq2_ratio, 5.0 / 8.0);
}

TEST(Compare, SelfComparisonIsNotSignificant) {
  const CampaignResult r = Aggregate(
      {Rec(0, SeedStatus::kMisclassificationFound, 3), Rec(1, SeedStatus::kMisclassificationFound, 9),
       Rec(2, SeedStatus::kBudgetExhausted, 250), Rec(3, SeedStatus::kSeedRejected)},
      250);
  const StatReport rq3 = CompareCampaigns(r, r, Metric::kRq3);
  EXPECT_NEAR(*rq3.mw_p, 1.0, 1e-12);
  EXPECT_EQ(*rq3.cohens_d, 0.0);
  EXPECT_FALSE(rq3.significant);
  const StatReport rq2 = CompareCampaigns(r, r, Metric::kRq2);
  EXPECT_NEAR(*rq2.fisher_p, 1.0, 1e-12);
  EXPECT_FALSE(rq2.significant);
}

TEST(Compare, SeparatedIterationsAreSignificant) {
  std::vector<SeedRecord> fast, slow;
  for (std::size_t i = 0; i < 20; ++i) {
    fast.push_back(Rec(i, SeedStatus::kMisclassificationFound, 1 + i));
    slow.push_back(Rec(i, SeedStatus::kMisclassificationFound, 100 + i));
  }
  const StatReport r = CompareCampaigns(Aggregate(fast, 250), Aggregate(slow, 250), Metric::kRq3);
  EXPECT_TRUE(r.significant);
  EXPECT_LT(*r.mw_p, 1e-6);
  EXPECT_LT(*r.cohens_d, -2.0);
}

TEST(Compare, Rq2TableLayout) {
  const CampaignResult a = Aggregate(Records(1, 8, 2), 250);
  const CampaignResult b = Aggregate(Records(3, 1, 9), 250);
  const StatReport r = CompareCampaigns(a, b, Metric::kRq2);
  ASSERT_TRUE(r.table);
  EXPECT_EQ(r.table->a, 8u);
  EXPECT_EQ(r.table->b, 2u);
  EXPECT_EQ(r.table->c, 1u);
  EXPECT_EQ(r.table->d, 9u);
  EXPECT_TRUE(r.significant);
  ExpectKind(ErrorKind::kInvalidState, [&] { CompareCampaigns(a, b, Metric::kRq4); });
}

TEST(Compare, HumanMetricsTables) {
  CampaignResult a = Aggregate(Records(0, 10, 0), 250);
  CampaignResult b = a;
  a.human = HumanMetrics{10, 9, 8};
  b.human = HumanMetrics{10, 2, 1};
  const StatReport rq4 = CompareCampaigns(a, b, Metric::kRq4);
  EXPECT_EQ(rq4.table->a, 9u);
  EXPECT_EQ(rq4.table->b, 1u);
  const StatReport rq5 = CompareCampaigns(a, b, Metric::kRq5);
  EXPECT_EQ(rq5.table->a, 8u);
  EXPECT_EQ(rq5.table->b, 1u);
  EXPECT_EQ(rq5.table->c, 1u);
  EXPECT_EQ(rq5.table->d, 1u);
}

TEST(Config, LoadDefaultsAndResolvePaths) {
  TempDir dir;
  {
    std::ofstream out(dir / "c.cfg");
    out << "task = mnist\nmanifest = models/m\noutput_dir = runs/x\nstep_mode = low\n";
  }
  const CampaignConfig c = CampaignConfig::Load(dir / "c.cfg");
  EXPECT_EQ(c.n_seeds, 100u);
  EXPECT_EQ(c.pop_size, 25u);
  EXPECT_EQ(c.tshd_best, 10u);
  EXPECT_EQ(c.max_iterations, 250u);
  EXPECT_EQ(c.step_mode, StepMode::kLow);
  EXPECT_EQ(c.bounds_samples, 1000u);
  EXPECT_EQ(c.manifest_path, dir.path() / "models/m");
  EXPECT_EQ(c.output_dir, dir.path() / "runs/x");
  EXPECT_FALSE(c.shared_seed_pool);
  ExpectKind(ErrorKind::kParse, [] { ParseStepMode("medium"); });
}

TEST(Config, ValidationAndFingerprint) {
  TempDir dir;
  CampaignConfig c = ToyCampaign(dir);
  EXPECT_NO_THROW(c.Validate());
  CampaignConfig other = c;
  other.workers = 4;
  other.resume = true;
  other.output_dir = "/elsewhere";
  EXPECT_EQ(other.Fingerprint(), c.Fingerprint());
  other.rng_seed = 6;
  EXPECT_NE(other.Fingerprint(), c.Fingerprint());
  CampaignConfig bad = c;
  bad.n_seeds = 0;
  EXPECT_THROW(bad.Validate(), Error);
  bad = c;
  bad.clamp_max.reset();
  EXPECT_THROW(bad.Validate(), Error);
}

TEST(Persistence, SeedRecordRoundTrip) {
  TempDir dir;
  SeedRecord r;
  r.seed_index = 3;
  r.status = SeedStatus::kMisclassificationFound;
  r.family = ModelFamily::kDm;
  r.expected_label = 7;
  r.dataset_index = 123;
  r.prompt = "a photo of a teddy bear";
  r.seed_predicted_label = 7;
  r.seed_fitness = 0.123456789012345;
  r.predicted_label = 2;
  r.best_fitness = -1e-17;
  r.iterations = 41;
  r.fitness_trace = {0.5, 0.25, 1.0 / 3.0, -1e-17};
  r.final_delta = 0.0065;
  r.wall_seconds = 1.5;
  r.decode_seconds = 0.25;
  const Image image({1, 2, 1}, {0.f, 1.f});
  const std::vector<LatentVector> latents = {{0.5, 0.25}, {1.0, -1.0}};
  WriteSeedRecord(dir.path(), r, image, latents);
  const auto back = ReadSeedRecord(dir.path(), 3);
  ASSERT_TRUE(back);
  EXPECT_EQ(*back, r);
  EXPECT_TRUE(std::filesystem::exists(SeedDir(dir.path(), 3) / kImageName));
  EXPECT_EQ(adapters::ReadLatents(SeedDir(dir.path(), 3) / kLatentsName).size(), 2u);
  EXPECT_FALSE(ReadSeedRecord(dir.path(), 4));

  SeedRecord errored = Rec(4, SeedStatus::kErrored);
  errored.error = "backend exploded: code = 3 # really";
  WriteSeedRecord(dir.path(), errored, std::nullopt, std::vector<LatentVector>{{0.0}});
  EXPECT_EQ(ReadSeedRecord(dir.path(), 4)->status, SeedStatus::kErrored);
  EXPECT_EQ(LoadSeedRecords(dir.path()).size(), 2u);
}

TEST(Campaign, ToyRunPersistsAndReaggregates) {
  TempDir dir;
  const CampaignConfig c = ToyCampaign(dir);
  std::size_t progress = 0;
  const CampaignResult result = RunCampaign(c, [&](const SeedRecord&) { ++progress; });
  EXPECT_EQ(progress, c.n_seeds);
  EXPECT_EQ(result.n_seeds, c.n_seeds);
  EXPECT_EQ(result.n_rejected, 0u);
  EXPECT_DOUBLE_EQ(result.rq1_ratio, 1.0);
  ASSERT_TRUE(result.rq2_ratio);
  ASSERT_TRUE(result.rq3_mean_iterations);
  for (std::size_t k = 0; k < c.n_seeds; ++k) {
    EXPECT_TRUE(std::filesystem::exists(SeedDir(c.output_dir, k) / kOutcomeName));
    EXPECT_TRUE(std::filesystem::exists(SeedDir(c.output_dir, k) / kLatentsName));
    const bool found = result.records[k].status == SeedStatus::kMisclassificationFound;
    EXPECT_EQ(std::filesystem::exists(SeedDir(c.output_dir, k) / kImageName), found);
  }
  EXPECT_TRUE(std::filesystem::exists(c.output_dir / kRunManifestName));
  EXPECT_EQ(ReadText(c.output_dir / kMetricsName), MetricsCsv(result));
  EXPECT_EQ(LoadCampaignResult(c.output_dir), result);

  // Independent recount from the outcome files.
  std::size_t found = 0, exhausted = 0, iterations = 0;
  for (std::size_t k = 0; k < c.n_seeds; ++k) {
    const KeyValueFile kv = KeyValueFile::Load(SeedDir(c.output_dir, k) / kOutcomeName);
    const std::string status = kv.GetString("status");
    found += status == "misclassification_found";
    exhausted += status == "budget_exhausted";
    iterations += static_cast<std::size_t>(kv.GetInt("iterations"));
  }
  EXPECT_EQ(found, result.n_found);
  EXPECT_EQ(exhausted, result.n_exhausted);
  EXPECT_DOUBLE_EQ(*result.rq3_mean_iterations, double(iterations) / double(c.n_seeds));
}

TEST(Campaign, WorkerCountDoesNotChangeResults) {
  TempDir dir;
  CampaignConfig c = ToyCampaign(dir, 24);
  const CampaignResult one = RunCampaign(c);
  const std::string metrics_one = ReadText(c.output_dir / kMetricsName);
  c.workers = 3;
  const CampaignResult three = RunCampaign(c);
  EXPECT_EQ(ReadText(c.output_dir / kMetricsName), metrics_one);
  ASSERT_EQ(one.records.size(), three.records.size());
  for (std::size_t k = 0; k < one.records.size(); ++k) {
    EXPECT_EQ(one.records[k].status, three.records[k].status);
    EXPECT_EQ(one.records[k].fitness_trace, three.records[k].fitness_trace);
  }
}

TEST(Campaign, ResumeSkipsCompletedSeeds) {
  TempDir dir;
  CampaignConfig c = ToyCampaign(dir, 10);
  const CampaignResult full = RunCampaign(c);
  std::filesystem::remove_all(SeedDir(c.output_dir, 4));
  std::filesystem::remove_all(SeedDir(c.output_dir, 7));
  const auto before = std::filesystem::last_write_time(SeedDir(c.output_dir, 0) / kOutcomeName);
  c.resume = true;
  std::vector<std::size_t> rerun;
  const CampaignResult resumed = RunCampaign(c, [&](const SeedRecord& r) { rerun.push_back(r.seed_index); });
  EXPECT_EQ(rerun, (std::vector<std::size_t>{4, 7}));
  EXPECT_EQ(std::filesystem::last_write_time(SeedDir(c.output_dir, 0) / kOutcomeName), before);
  EXPECT_EQ(MetricsCsv(resumed), MetricsCsv(full));

  CampaignConfig changed = c;
  changed.rng_seed = 99;
  ExpectKind(ErrorKind::kInvalidState, [&] { RunCampaign(changed); });
}

TEST(Campaign, AlwaysCorrectClassifierExhausts) {
  TempDir dir;
  {
    std::ofstream out(dir / "manifest");
    out << "family = toy\nlatent_dim = 2\nnum_classes = 2\ngenerator = toy_identity\n"
           "classifier = toy_logistic\ntoy_weights = 0, 0\ntoy_bias = 50\n";
  }
  CampaignConfig c = ToyCampaign(dir, 1);
  c.manifest_path = dir / "manifest";
  const CampaignResult r = RunCampaign(c);
  EXPECT_EQ(r.rq1_ratio, 1.0);
  EXPECT_EQ(r.rq2_count, 0u);
  EXPECT_EQ(*r.rq3_mean_iterations, 250.0);
}

TEST(Campaign, SeedPlanIsDisjointFromBoundsPoolForVae) {
  TempDir dir;
  CampaignConfig c;
  c.task = "mnist";
  c.manifest_path = TIG_MODELS_DIR "/mnist_small/manifest";
  c.output_dir = dir / "run";
  c.n_seeds = 50;
  c.bounds_samples = 300;
  const auto manifest = adapters::AdapterManifest::Load(c.manifest_path);
  const auto adapters = adapters::LoadAdapters(manifest);
  const auto plan = PlanSeeds(c, manifest, adapters);
  ASSERT_EQ(plan.size(), 50u);
  for (const PlannedSeed& s : plan) {
    ASSERT_TRUE(s.dataset_index);
    EXPECT_GE(*s.dataset_index, 300u);
    EXPECT_EQ(s.spec.latent.dimension(), 400u);
  }
  EXPECT_EQ(PlanSeeds(c, manifest, adapters)[7].dataset_index, plan[7].dataset_index);
}

TEST(Campaign, ToyStepComesFromPriorBounds) {
  TempDir dir;
  const CampaignConfig c = ToyCampaign(dir);
  const auto manifest = adapters::AdapterManifest::Load(c.manifest_path);
  const auto adapters = adapters::LoadAdapters(manifest);
  const CampaignSetup setup = PrepareCampaign(c, manifest, adapters);
  EXPECT_EQ(setup.search.bounds.min_value, -1.0);
  EXPECT_EQ(setup.search.bounds.max_value, 1.0);
  EXPECT_DOUBLE_EQ(setup.search.delta_init, setup.measured_bounds.range() / 1e3);
  EXPECT_GT(setup.search.delta_init, 5e-3);
  EXPECT_LT(setup.search.delta_init, 8e-3);
}

TEST(Report, WritesTracesAndPlots) {
  TempDir dir;
  const CampaignConfig c = ToyCampaign(dir, 5);
  const CampaignResult r = RunCampaign(c);
  WriteReport(r, dir / "report");
  const std::string csv = ReadText(dir / "report" / "traces.csv");
  std::size_t rows = 0;
  for (const SeedRecord& s : r.records) rows += s.fitness_trace.size();
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), static_cast<long>(rows + 1));
  EXPECT_NE(ReadText(dir / "report" / "fitness_traces.svg").find("<polyline"), std::string::npos);
  EXPECT_NE(ReadText(dir / "report" / "iterations.svg").find("<rect"), std::string::npos);
}

}  // namespace
}  // namespace tig::harness
