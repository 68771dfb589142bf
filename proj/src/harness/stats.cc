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

#include "tig/harness/stats.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "tig/core/errors.h"

namespace tig::harness {
namespace {

double LogChoose(std::uint64_t n, std::uint64_t k) {
  return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

// Midranks (1-based) of the pooled sample.
std::vector<double> MidRanks(const std::vector<double>& pooled) {
  std::vector<std::size_t> order(pooled.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return pooled[i] < pooled[j]; });
  std::vector<double> ranks(pooled.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && pooled[order[j + 1]] == pooled[order[i]]) ++j;
    const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

FisherResult FisherExact(const Table2x2& t) {
  FisherResult result;
  const std::uint64_t row1 = t.a + t.b, row2 = t.c + t.d;
  const std::uint64_t col1 = t.a + t.c, col2 = t.b + t.d;
  const std::uint64_t n = row1 + row2;

  const double ad = static_cast<double>(t.a) * static_cast<double>(t.d);
  const double bc = static_cast<double>(t.b) * static_cast<double>(t.c);
  if (bc == 0.0) {
    result.odds_ratio = ad == 0.0 ? std::numeric_limits<double>::quiet_NaN()
                                  : std::numeric_limits<double>::infinity();
  } else {
    result.odds_ratio = ad / bc;
  }

  if (row1 == 0 || row2 == 0 || col1 == 0 || col2 == 0) {
    result.degenerate = true;
    result.p_value = 1.0;
    return result;
  }

  // Cell a ranges over [max(0, col1 - row2), min(row1, col1)].
  const std::uint64_t lo = col1 > row2 ? col1 - row2 : 0;
  const std::uint64_t hi = std::min(row1, col1);
  const double log_denominator = LogChoose(n, col1);
  auto log_p = [&](std::uint64_t x) {
    return LogChoose(row1, x) + LogChoose(row2, col1 - x) - log_denominator;
  };
  const double observed = log_p(t.a);
  const double threshold = observed + std::log1p(1e-7);
  double p = 0.0;
  for (std::uint64_t x = lo; x <= hi; ++x) {
    const double lp = log_p(x);
    if (lp <= threshold) p += std::exp(lp);
  }
  result.p_value = std::min(1.0, p);
  return result;
}

MannWhitneyResult MannWhitneyU(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "Mann-Whitney needs two non-empty samples");
  }
  const std::size_t na = a.size(), nb = b.size(), n = na + nb;
  std::vector<double> pooled(a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  const std::vector<double> ranks = MidRanks(pooled);

  const double rank_sum_a = std::accumulate(ranks.begin(), ranks.begin() + na, 0.0);
  const double offset = static_cast<double>(na) * (na + 1) / 2.0;
  const double mean_u = static_cast<double>(na) * nb / 2.0;

  MannWhitneyResult result;
  result.u = rank_sum_a - offset;
  const double observed_gap = std::abs(result.u - mean_u);

  if (n <= kMannWhitneyExactLimit) {
    // Every choice of na positions out of n is equally likely under H0.
    result.exact = true;
    std::uint64_t extreme = 0, total = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != na) continue;
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) sum += ranks[i];
      }
      ++total;
      if (std::abs(sum - offset - mean_u) >= observed_gap - 1e-9) ++extreme;
    }
    result.p_value = static_cast<double>(extreme) / static_cast<double>(total);
    return result;
  }

  std::vector<double> sorted = pooled;
  std::sort(sorted.begin(), sorted.end());
  double tie_term = 0.0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && sorted[j] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i);
    tie_term += t * t * t - t;
    i = j;
  }
  const double nd = static_cast<double>(n);
  const double variance = static_cast<double>(na) * nb / 12.0 *
                          ((nd + 1.0) - tie_term / (nd * (nd - 1.0)));
  if (variance <= 0.0) {
    result.p_value = 1.0;
    return result;
  }
  const double z = std::max(0.0, observed_gap - 0.5) / std::sqrt(variance);
  result.p_value = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
  return result;
}

double CohensD(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) {
    throw Error(ErrorKind::kInvalidArgument, "Cohen's d needs at least two values per sample");
  }
  // Welford running moments.
  auto moments = [](std::span<const double> xs) {
    double mean = 0.0, m2 = 0.0;
    std::size_t k = 0;
    for (double x : xs) {
      ++k;
      const double delta = x - mean;
      mean += delta / static_cast<double>(k);
      m2 += delta * (x - mean);
    }
    return std::pair{mean, m2};
  };
  const auto [mean_a, m2_a] = moments(a);
  const auto [mean_b, m2_b] = moments(b);
  const double pooled_var = (m2_a + m2_b) / static_cast<double>(a.size() + b.size() - 2);
  const double diff = mean_a - mean_b;
  if (pooled_var == 0.0) {
    if (diff == 0.0) return 0.0;
    return diff > 0 ? std::numeric_limits<double>::infinity()
                    : -std::numeric_limits<double>::infinity();
  }
  return diff / std::sqrt(pooled_var);
}

}  // namespace tig::harness
