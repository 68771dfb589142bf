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

#include "tig/core/latent.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "tig/core/errors.h"

namespace tig {

LatentVector::LatentVector(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "latent vector must be non-empty");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw Error(ErrorKind::kInvalidArgument,
                  "latent coordinate " + std::to_string(i) + " is not finite");
    }
  }
}

LatentBounds LatentBounds::Scalar(double min_value, double max_value) {
  LatentBounds bounds{min_value, max_value, std::nullopt};
  bounds.Validate();
  return bounds;
}

void LatentBounds::Validate() const {
  if (!std::isfinite(min_value) || !std::isfinite(max_value) ||
      min_value > max_value) {
    throw Error(ErrorKind::kInvalidArgument, "latent bounds must satisfy min <= max");
  }
  if (!per_dimension) return;
  const auto& lo = per_dimension->min_values;
  const auto& hi = per_dimension->max_values;
  if (lo.size() != hi.size() || lo.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "per-dimension bounds size mismatch");
  }
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i]) {
      throw Error(ErrorKind::kInvalidArgument,
                  "per-dimension bound inverted at " + std::to_string(i));
    }
  }
  if (*std::min_element(lo.begin(), lo.end()) != min_value ||
      *std::max_element(hi.begin(), hi.end()) != max_value) {
    throw Error(ErrorKind::kInvalidArgument,
                "scalar bounds disagree with per-dimension extrema");
  }
}

LatentBounds EstimateLatentBounds(std::span<const LatentVector> samples) {
  if (samples.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "no samples to estimate bounds from");
  }
  const std::size_t d = samples.front().dimension();
  PerDimensionBounds per{std::vector<double>(samples.front().values().begin(),
                                             samples.front().values().end()),
                         std::vector<double>(samples.front().values().begin(),
                                             samples.front().values().end())};
  for (const LatentVector& sample : samples) {
    if (sample.dimension() != d) {
      throw Error(ErrorKind::kInvalidArgument, "sample dimension mismatch");
    }
    for (std::size_t i = 0; i < d; ++i) {
      per.min_values[i] = std::min(per.min_values[i], sample[i]);
      per.max_values[i] = std::max(per.max_values[i], sample[i]);
    }
  }
  LatentBounds bounds;
  bounds.min_value = *std::min_element(per.min_values.begin(), per.min_values.end());
  bounds.max_value = *std::max_element(per.max_values.begin(), per.max_values.end());
  bounds.per_dimension = std::move(per);
  return bounds;
}

PerturbationSteps DerivePerturbationSteps(const LatentBounds& bounds) {
  bounds.Validate();
  const double range = bounds.range();
  if (!(range > 0.0)) {
    throw Error(ErrorKind::kDegenerateBounds,
                "latent range is zero; search cannot perturb");
  }
  return {range / 1e4, range / 1e3, range};
}

double StepFor(const PerturbationSteps& steps, StepMode mode) {
  return mode == StepMode::kLow ? steps.low : steps.high;
}

}  // namespace tig
