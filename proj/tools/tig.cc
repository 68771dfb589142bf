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

#include <csignal>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "tig/adapters/io.h"
#include "tig/adapters/registry.h"
#include "tig/assessment/server.h"
#include "tig/assessment/store.h"
#include "tig/assessment/survey.h"
#include "tig/assessment/verdict.h"
#include "tig/core/errors.h"
#include "tig/core/key_value.h"
#include "tig/core/random.h"
#include "tig/harness/campaign.h"
#include "tig/harness/config.h"
#include "tig/harness/metrics.h"
#include "tig/harness/persistence.h"
#include "tig/harness/report.h"

namespace fs = std::filesystem;
using namespace tig;

namespace {

assessment::AssessmentServer* g_server = nullptr;

harness::CampaignResult LoadResult(const fs::path& run_dir,
                                   const std::optional<fs::path>& store_dir) {
  harness::CampaignResult result = harness::LoadCampaignResult(run_dir);
  if (store_dir) {
    result.human = assessment::ToHumanMetrics(assessment::SurveyStore::Open(*store_dir));
  }
  return result;
}

int Bounds(const fs::path& manifest_path, std::size_t samples, std::uint64_t rng_seed,
           const std::optional<fs::path>& out) {
  const auto manifest = adapters::AdapterManifest::Load(manifest_path);
  const auto adapters = adapters::LoadAdapters(manifest);
  const auto estimate = harness::EstimateBounds(manifest, adapters, samples, rng_seed);
  const KeyValueFile values = harness::ToValues(estimate);
  if (out) {
    values.SaveAtomically(*out);
  } else {
    std::cout << values.Serialize();
  }
  return 0;
}

int Run(const fs::path& config_path, std::optional<std::size_t> workers, bool resume,
        std::optional<fs::path> output_dir, bool quiet) {
  harness::CampaignConfig config = harness::CampaignConfig::Load(config_path);
  if (workers) config.workers = *workers;
  if (resume) config.resume = true;
  if (output_dir) config.output_dir = *output_dir;
  std::size_t done = 0;
  const harness::CampaignResult result =
      harness::RunCampaign(config, [&](const harness::SeedRecord& r) {
        ++done;
        if (quiet) return;
        std::cerr << "[" << done << "/" << config.n_seeds << "] seed " << r.seed_index << " "
                  << harness::ToString(r.status) << " iterations=" << r.iterations;
        if (!r.error.empty()) std::cerr << " error=" << r.error;
        std::cerr << "\n";
      });
  std::cout << harness::MetricsCsv(result);
  return 0;
}

int Compare(const fs::path& run1, const fs::path& run2, const std::string& metric_name,
            const std::optional<fs::path>& store1, const std::optional<fs::path>& store2) {
  const harness::Metric metric = harness::ParseMetric(metric_name);
  const harness::StatReport report = harness::CompareCampaigns(
      LoadResult(run1, store1), LoadResult(run2, store2), metric);
  std::cout << "metric," << harness::ToString(report.metric) << "\n";
  if (report.table) {
    std::cout << "table," << report.table->a << " " << report.table->b << " " << report.table->c
              << " " << report.table->d << "\n";
  }
  if (report.fisher_p) std::cout << "fisher_p," << FormatDouble(*report.fisher_p) << "\n";
  if (report.odds_ratio) std::cout << "odds_ratio," << FormatDouble(*report.odds_ratio) << "\n";
  if (report.mw_u) std::cout << "mann_whitney_u," << FormatDouble(*report.mw_u) << "\n";
  if (report.mw_p) std::cout << "mann_whitney_p," << FormatDouble(*report.mw_p) << "\n";
  if (report.cohens_d) std::cout << "cohens_d," << FormatDouble(*report.cohens_d) << "\n";
  std::cout << "significant," << (report.significant ? "true" : "false") << "\n";
  return 0;
}

struct SurveyBuildArgs {
  std::vector<fs::path> runs;
  std::string task = "mnist";
  std::optional<fs::path> class_map;
  fs::path acq_images;
  fs::path acq_labels;
  std::size_t acq_count = 20;
  fs::path out;
  std::size_t size = assessment::kDefaultSurveySize;
  std::uint64_t rng_seed = 0;
};

int SurveyBuild(const SurveyBuildArgs& args) {
  std::optional<adapters::ClassMap> classes;
  if (args.class_map) classes = adapters::ClassMap::Load(*args.class_map);
  const auto task = assessment::TaskSpec::ForTask(args.task, classes);

  std::vector<assessment::ImageItem> images;
  for (const fs::path& run : args.runs) {
    for (const harness::SeedRecord& r : harness::LoadSeedRecords(run)) {
      if (r.status != harness::SeedStatus::kMisclassificationFound) continue;
      images.push_back({fs::absolute(harness::SeedDir(run, r.seed_index) / harness::kImageName)
                            .string(),
                        r.expected_label, r.predicted_label});
    }
  }

  const adapters::LabelledImages pool = adapters::ReadIdx(args.acq_images, args.acq_labels);
  const fs::path staging = fs::temp_directory_path() / ("tig_acq_" + std::to_string(::getpid()));
  fs::create_directories(staging);
  std::vector<assessment::ImageItem> acq;
  for (std::size_t i = 0; i < std::min(args.acq_count, pool.images.size()); ++i) {
    const fs::path path = staging / ("acq_" + std::to_string(i) + ".png");
    adapters::WritePng(path, pool.images[i]);
    acq.push_back({path.string(), pool.labels[i], std::nullopt});
  }

  Rng rng = MakeStream(args.rng_seed, stream::kSurvey, 0);
  std::vector<assessment::Survey> surveys =
      assessment::BuildSurveys(images, task, acq, rng, args.size);
  assessment::MaterializeImages(surveys, fs::current_path(), args.out);
  fs::remove_all(staging);
  assessment::SurveyStore::Create(args.out, std::move(surveys));
  std::cout << "surveys written to " << args.out.string() << " (" << images.size()
            << " images)\n";
  return 0;
}

int SurveyServe(const fs::path& store_dir, const std::string& host, int port,
                const std::optional<std::string>& admin_token) {
  assessment::SurveyStore store = assessment::SurveyStore::Open(store_dir);
  assessment::AssessmentServer server(store, {admin_token, "*"});
  const int bound = server.Bind(host, port);
  g_server = &server;
  std::signal(SIGINT, [](int) {
    if (g_server) g_server->Stop();
  });
  std::signal(SIGTERM, [](int) {
    if (g_server) g_server->Stop();
  });
  std::cerr << "serving " << store.surveys().size() << " surveys on http://" << host << ":"
            << bound << "\n";
  server.Serve();
  g_server = nullptr;
  return 0;
}

int SurveyExport(const fs::path& store_dir) {
  const auto store = assessment::SurveyStore::Open(store_dir);
  const auto responses = store.responses();
  std::cout << assessment::AssessmentCsv(assessment::BuildRecords(store.surveys(), responses));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Search-based test input generation over generative-model latent spaces"};
  app.require_subcommand(1);
  std::function<int()> action;

  auto* bounds = app.add_subcommand("bounds", "Estimate latent bounds and perturbation steps");
  fs::path bounds_manifest;
  std::size_t bounds_samples = 1000;
  std::uint64_t bounds_seed = 0;
  std::optional<fs::path> bounds_out;
  bounds->add_option("manifest", bounds_manifest, "Adapter manifest")->required();
  bounds->add_option("--samples", bounds_samples, "Latents to sample");
  bounds->add_option("--rng-seed", bounds_seed, "Master RNG seed");
  bounds->add_option("--out", bounds_out, "Write bounds here instead of stdout");
  bounds->callback(
      [&] { action = [&] { return Bounds(bounds_manifest, bounds_samples, bounds_seed, bounds_out); }; });

  auto* run = app.add_subcommand("run", "Run a campaign");
  fs::path run_config;
  std::optional<std::size_t> run_workers;
  std::optional<fs::path> run_output;
  bool run_resume = false;
  bool run_quiet = false;
  run->add_option("config", run_config, "Campaign config")->required();
  run->add_option("--workers", run_workers, "Override worker count");
  run->add_option("--output-dir", run_output, "Override run directory");
  run->add_flag("--resume", run_resume, "Keep completed seed records");
  run->add_flag("-q,--quiet", run_quiet, "No per-seed progress");
  run->callback([&] {
    action = [&] { return Run(run_config, run_workers, run_resume, run_output, run_quiet); };
  });

  auto* metrics = app.add_subcommand("metrics", "Re-aggregate a run directory");
  fs::path metrics_run;
  std::optional<fs::path> metrics_store;
  metrics->add_option("run_dir", metrics_run)->required();
  metrics->add_option("--assessment", metrics_store, "Survey store for RQ4/RQ5");
  metrics->callback([&] {
    action = [&] {
      std::cout << harness::MetricsCsv(LoadResult(metrics_run, metrics_store));
      return 0;
    };
  });

  auto* compare = app.add_subcommand("compare", "Compare two campaigns on one metric");
  fs::path compare_a, compare_b;
  std::string compare_metric = "rq2";
  std::optional<fs::path> compare_store_a, compare_store_b;
  compare->add_option("run1", compare_a)->required();
  compare->add_option("run2", compare_b)->required();
  compare->add_option("--metric", compare_metric, "rq1..rq5")->required();
  compare->add_option("--assessment1", compare_store_a, "Survey store of run1");
  compare->add_option("--assessment2", compare_store_b, "Survey store of run2");
  compare->callback([&] {
    action = [&] {
      return Compare(compare_a, compare_b, compare_metric, compare_store_a, compare_store_b);
    };
  });

  auto* survey = app.add_subcommand("survey", "Human assessment surveys");
  survey->require_subcommand(1);
  auto* build = survey->add_subcommand("build", "Build surveys from campaign images");
  SurveyBuildArgs build_args;
  build->add_option("--run", build_args.runs, "Run directory (repeatable)")->required();
  build->add_option("--task", build_args.task, "mnist | svhn | cifar10 | imagenet");
  build->add_option("--class-map", build_args.class_map, "Class names (imagenet)");
  build->add_option("--acq-images", build_args.acq_images, "IDX images with obvious labels")
      ->required();
  build->add_option("--acq-labels", build_args.acq_labels, "IDX labels")->required();
  build->add_option("--acq-count", build_args.acq_count, "Attention-check pool size");
  build->add_option("--size", build_args.size, "Images per survey");
  build->add_option("--rng-seed", build_args.rng_seed, "RNG seed");
  build->add_option("--out", build_args.out, "Store directory")->required();
  build->callback([&] { action = [&] { return SurveyBuild(build_args); }; });

  auto* serve = survey->add_subcommand("serve", "Serve the assessment API");
  fs::path serve_store;
  std::string serve_host = "127.0.0.1";
  int serve_port = 8080;
  std::optional<std::string> serve_token;
  serve->add_option("store", serve_store)->required();
  serve->add_option("--host", serve_host);
  serve->add_option("--port", serve_port);
  serve->add_option("--admin-token", serve_token);
  serve->callback([&] {
    action = [&] { return SurveyServe(serve_store, serve_host, serve_port, serve_token); };
  });

  auto* exporter = survey->add_subcommand("export", "Print the assessment CSV");
  fs::path export_store;
  exporter->add_option("store", export_store)->required();
  exporter->callback([&] { action = [&] { return SurveyExport(export_store); }; });

  auto* report = app.add_subcommand("report", "Write fitness-trace CSV and plots");
  fs::path report_run;
  std::optional<fs::path> report_out;
  report->add_option("run_dir", report_run)->required();
  report->add_option("--out", report_out, "Output directory (default <run_dir>/report)");
  report->callback([&] {
    action = [&] {
      const fs::path out = report_out.value_or(report_run / "report");
      harness::WriteReport(harness::LoadCampaignResult(report_run), out);
      std::cout << "report written to " << out.string() << "\n";
      return 0;
    };
  });

  CLI11_PARSE(app, argc, argv);
  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "tig: " << ToString(e.kind()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "tig: " << e.what() << "\n";
    return 1;
  }
}
