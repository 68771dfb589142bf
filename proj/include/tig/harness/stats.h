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

#ifndef TIG_HARNESS_STATS_H_
#define TIG_HARNESS_STATS_H_

#include <cstdint>
#include <span>

namespace tig::harness {

// 2x2 contingency table:
//              success  failure
//   group 1       a        b
//   group 2       c        d
struct Table2x2 {
  std::uint64_t a = 0, b = 0, c = 0, d = 0;
};

struct FisherResult {
  double p_value = 1.0;
  // Sample odds ratio (a*d)/(b*c); +inf when only b*c is zero.
  double odds_ratio = 1.0;
  // Some row or column margin is zero; p is 1 by convention.
  bool degenerate = false;
};

// Two-sided Fisher exact test: sums every table with the observed margins
// whose hypergeometric probability does not exceed the observed one
// (relative slack 1e-7 for floating-point ties).
FisherResult FisherExact(const Table2x2& table);

struct MannWhitneyResult {
  double u = 0.0;  // U for sample a (midranks for ties)
  double p_value = 1.0;
  bool exact = false;
};

// Pooled sizes at or below this use the exact permutation distribution.
inline constexpr std::size_t kMannWhitneyExactLimit = 12;

// Two-sided Mann-Whitney U test. Exact enumeration of all group
// assignments when n_a + n_b <= kMannWhitneyExactLimit; otherwise normal
// approximation with tie-corrected variance and a 0.5 continuity correction.
MannWhitneyResult MannWhitneyU(std::span<const double> a, std::span<const double> b);

// (mean_a - mean_b) / pooled sd, pooled from unbiased variances.
double CohensD(std::span<const double> a, std::span<const double> b);

}  // namespace tig::harness

#endif  // TIG_HARNESS_STATS_H_
