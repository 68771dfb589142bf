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

#ifndef TIG_HARNESS_REPORT_H_
#define TIG_HARNESS_REPORT_H_

#include <filesystem>
#include <string>

#include "tig/harness/metrics.h"

namespace tig::harness {

// Long-format fitness traces: seed,status,iteration,f_min.
std::string FitnessTraceCsv(const CampaignResult& result);

// Line plot of every seed's best fitness per iteration, with f = 0 marked.
std::string FitnessTraceSvg(const CampaignResult& result);

// Histogram of iterations to misclassification over found seeds.
std::string IterationHistogramSvg(const CampaignResult& result, std::size_t bins = 20);

// Writes traces.csv, fitness_traces.svg and iterations.svg into `out_dir`.
void WriteReport(const CampaignResult& result, const std::filesystem::path& out_dir);

}  // namespace tig::harness

#endif  // TIG_HARNESS_REPORT_H_
