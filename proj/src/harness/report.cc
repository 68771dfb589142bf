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

#include "tig/harness/report.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tig/core/key_value.h"
#include "tig/harness/persistence.h"

namespace tig::harness {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kMargin = 48.0;

std::string Num(double x) {
  std::ostringstream out;
  out.precision(4);
  out << std::fixed << x;
  std::string s = out.str();
  s.erase(s.find_last_not_of('0') + 1);
  if (s.back() == '.') s.pop_back();
  return s;
}

void OpenSvg(std::ostringstream& out, const std::string& title) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" font-family=\"sans-serif\" font-size=\"11\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"18\" text-anchor=\"middle\">" << title
      << "</text>\n"
      << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\""
      << kWidth - 2 * kMargin << "\" height=\"" << kHeight - 2 * kMargin
      << "\" fill=\"none\" stroke=\"black\"/>\n";
}

void AxisLabels(std::ostringstream& out, double x0, double x1, double y0, double y1,
                const std::string& xlabel, const std::string& ylabel) {
  const double bottom = kHeight - kMargin;
  out << "<text x=\"" << kMargin << "\" y=\"" << bottom + 14 << "\">" << Num(x0) << "</text>\n"
      << "<text x=\"" << kWidth - kMargin << "\" y=\"" << bottom + 14
      << "\" text-anchor=\"end\">" << Num(x1) << "</text>\n"
      << "<text x=\"" << kMargin - 4 << "\" y=\"" << bottom << "\" text-anchor=\"end\">"
      << Num(y0) << "</text>\n"
      << "<text x=\"" << kMargin - 4 << "\" y=\"" << kMargin + 10
      << "\" text-anchor=\"end\">" << Num(y1) << "</text>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 10
      << "\" text-anchor=\"middle\">" << xlabel << "</text>\n"
      << "<text x=\"14\" y=\"" << kHeight / 2 << "\" transform=\"rotate(-90 14 "
      << kHeight / 2 << ")\" text-anchor=\"middle\">" << ylabel << "</text>\n";
}

const char* StatusColor(SeedStatus status) {
  switch (status) {
    case SeedStatus::kMisclassificationFound:
      return "#c0392b";
    case SeedStatus::kBudgetExhausted:
      return "#2c7fb8";
    default:
      return "#999999";
  }
}

}  // namespace

std::string FitnessTraceCsv(const CampaignResult& result) {
  std::ostringstream out;
  out << "seed,status,iteration,f_min\n";
  for (const SeedRecord& r : result.records) {
    for (std::size_t i = 0; i < r.fitness_trace.size(); ++i) {
      out << r.seed_index << ',' << ToString(r.status) << ',' << i + 1 << ','
          << FormatDouble(r.fitness_trace[i]) << '\n';
    }
  }
  return out.str();
}

std::string FitnessTraceSvg(const CampaignResult& result) {
  std::size_t max_len = 1;
  double lo = 0.0;
  double hi = 0.0;
  for (const SeedRecord& r : result.records) {
    max_len = std::max(max_len, r.fitness_trace.size());
    for (double f : r.fitness_trace) {
      lo = std::min(lo, f);
      hi = std::max(hi, f);
    }
  }
  if (hi - lo < 1e-12) hi = lo + 1.0;
  const double plot_w = kWidth - 2 * kMargin;
  const double plot_h = kHeight - 2 * kMargin;
  auto px = [&](std::size_t i) {
    return kMargin + plot_w * (max_len > 1 ? double(i) / double(max_len - 1) : 0.0);
  };
  auto py = [&](double f) { return kMargin + plot_h * (hi - f) / (hi - lo); };

  std::ostringstream out;
  OpenSvg(out, "Best fitness per iteration");
  out << "<line x1=\"" << kMargin << "\" x2=\"" << kWidth - kMargin << "\" y1=\"" << py(0.0)
      << "\" y2=\"" << py(0.0) << "\" stroke=\"black\" stroke-dasharray=\"4 3\"/>\n";
  for (const SeedRecord& r : result.records) {
    if (r.fitness_trace.empty()) continue;
    out << "<polyline fill=\"none\" stroke-width=\"1\" stroke-opacity=\"0.6\" stroke=\""
        << StatusColor(r.status) << "\" points=\"";
    for (std::size_t i = 0; i < r.fitness_trace.size(); ++i) {
      out << Num(px(i)) << ',' << Num(py(r.fitness_trace[i])) << ' ';
    }
    out << "\"/>\n";
  }
  AxisLabels(out, 1, double(max_len), lo, hi, "iteration", "fitness");
  out << "</svg>\n";
  return out.str();
}

std::string IterationHistogramSvg(const CampaignResult& result, std::size_t bins) {
  bins = std::max<std::size_t>(bins, 1);
  const double max_iter = double(std::max<std::size_t>(result.max_iterations, 1));
  std::vector<std::size_t> counts(bins, 0);
  for (const SeedRecord& r : result.records) {
    if (r.status != SeedStatus::kMisclassificationFound) continue;
    const auto b = static_cast<std::size_t>((double(r.iterations) - 1.0) / max_iter * bins);
    ++counts[std::min(b, bins - 1)];
  }
  const std::size_t peak = std::max<std::size_t>(
      1, *std::max_element(counts.begin(), counts.end()));
  const double plot_w = kWidth - 2 * kMargin;
  const double plot_h = kHeight - 2 * kMargin;
  const double bar_w = plot_w / double(bins);

  std::ostringstream out;
  OpenSvg(out, "Iterations to misclassification");
  for (std::size_t b = 0; b < bins; ++b) {
    const double h = plot_h * double(counts[b]) / double(peak);
    out << "<rect x=\"" << Num(kMargin + bar_w * b + 1) << "\" y=\""
        << Num(kHeight - kMargin - h) << "\" width=\"" << Num(std::max(bar_w - 2, 1.0))
        << "\" height=\"" << Num(h) << "\" fill=\"#c0392b\"/>\n";
  }
  AxisLabels(out, 1, max_iter, 0, double(peak), "iterations", "seeds");
  out << "</svg>\n";
  return out.str();
}

void WriteReport(const CampaignResult& result, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  WriteTextAtomically(out_dir / "traces.csv", FitnessTraceCsv(result));
  WriteTextAtomically(out_dir / "fitness_traces.svg", FitnessTraceSvg(result));
  WriteTextAtomically(out_dir / "iterations.svg", IterationHistogramSvg(result));
}

}  // namespace tig::harness
