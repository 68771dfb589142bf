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

// Independent reference implementations used as expected-value oracles.
#ifndef TIG_TESTS_ORACLES_H_
#define TIG_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace tig::oracle {

inline std::uint64_t Choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Two-sided Fisher p: enumerate every table with the observed margins and
// sum the (integer) hypergeometric weights not exceeding the observed one.
inline double FisherP(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  const std::uint64_t r1 = a + b, r2 = c + d, c1 = a + c, n = a + b + c + d;
  if (r1 == 0 || r2 == 0 || c1 == 0 || c1 == n) return 1.0;
  const std::uint64_t observed = Choose(r1, a) * Choose(r2, c);
  std::uint64_t tail = 0;
  for (std::uint64_t x = 0; x <= std::min(r1, c1); ++x) {
    if (c1 - x > r2) continue;
    const std::uint64_t w = Choose(r1, x) * Choose(r2, c1 - x);
    if (w <= observed) tail += w;
  }
  return static_cast<double>(tail) / static_cast<double>(Choose(n, c1));
}

// U for sample a by direct pair counting (ties count one half).
inline double PairU(std::span<const double> a, std::span<const double> b) {
  double u = 0.0;
  for (double x : a) {
    for (double y : b) u += x > y ? 1.0 : (x == y ? 0.5 : 0.0);
  }
  return u;
}

// Two-sided permutation p: every distinct relabelling of the pooled sample
// into groups of the original sizes, |U - mean| at least as large.
inline double MannWhitneyPermutationP(std::span<const double> a, std::span<const double> b) {
  std::vector<double> pooled(a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  const double mean = static_cast<double>(a.size() * b.size()) / 2.0;
  const double gap = std::abs(PairU(a, b) - mean);
  std::vector<int> labels(pooled.size(), 1);
  std::fill(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(a.size()), 0);
  std::uint64_t extreme = 0, total = 0;
  do {
    std::vector<double> ga, gb;
    for (std::size_t i = 0; i < pooled.size(); ++i) (labels[i] == 0 ? ga : gb).push_back(pooled[i]);
    ++total;
    if (std::abs(PairU(ga, gb) - mean) >= gap) ++extreme;
  } while (std::next_permutation(labels.begin(), labels.end()));
  return static_cast<double>(extreme) / static_cast<double>(total);
}

// Cohen's d from the textbook two-pass formulas.
inline double CohensD(std::span<const double> a, std::span<const double> b) {
  auto mean = [](std::span<const double> x) {
    return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
  };
  auto ss = [](std::span<const double> x, double m) {
    double s = 0.0;
    for (double v : x) s += (v - m) * (v - m);
    return s;
  };
  const double ma = mean(a), mb = mean(b);
  const double pooled =
      (ss(a, ma) + ss(b, mb)) / static_cast<double>(a.size() + b.size() - 2);
  return (ma - mb) / std::sqrt(pooled);
}

struct GridPoint {
  double x = 0.0, y = 0.0;
};

// Points of a regular grid over [lo, hi]^2 where the 2-D logistic classifier
// assigns the label opposite to `expected_label` with fitness strictly below 0.
inline std::vector<GridPoint> LogisticMisclassifiedGrid(double w0, double w1, double bias,
                                                        int expected_label, double lo,
                                                        double hi, int steps) {
  std::vector<GridPoint> points;
  for (int i = 0; i <= steps; ++i) {
    for (int j = 0; j <= steps; ++j) {
      const double x = lo + (hi - lo) * i / steps;
      const double y = lo + (hi - lo) * j / steps;
      const double p0 = 1.0 / (1.0 + std::exp(-(w0 * x + w1 * y + bias)));
      const double fitness = expected_label == 0 ? 2.0 * p0 - 1.0 : 1.0 - 2.0 * p0;
      if (fitness < 0.0) points.push_back({x, y});
    }
  }
  return points;
}

}  // namespace tig::oracle

#endif  // TIG_TESTS_ORACLES_H_
