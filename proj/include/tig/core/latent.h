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

#ifndef TIG_CORE_LATENT_H_
#define TIG_CORE_LATENT_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace tig {

// A point in a generator's latent space. Always non-empty and finite.
class LatentVector {
 public:
  explicit LatentVector(std::vector<double> values);
  LatentVector(std::initializer_list<double> values)
      : LatentVector(std::vector<double>(values)) {}

  std::size_t dimension() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

  friend bool operator==(const LatentVector&, const LatentVector&) = default;

 private:
  std::vector<double> values_;
};

struct PerDimensionBounds {
  std::vector<double> min_values;
  std::vector<double> max_values;
};

// Scalar clamping range observed over sampled seeds. Per-dimension extrema
// are kept for diagnostics only; clamping uses the scalars.
struct LatentBounds {
  double min_value = 0.0;
  double max_value = 0.0;
  std::optional<PerDimensionBounds> per_dimension;

  static LatentBounds Scalar(double min_value, double max_value);

  double range() const { return max_value - min_value; }
  void Validate() const;
};

struct PerturbationSteps {
  double low = 0.0;
  double high = 0.0;
  double range = 0.0;
};

enum class StepMode { kLow, kHigh };

LatentBounds EstimateLatentBounds(std::span<const LatentVector> samples);

// low = range / 10^4, high = range / 10^3.
PerturbationSteps DerivePerturbationSteps(const LatentBounds& bounds);

double StepFor(const PerturbationSteps& steps, StepMode mode);

}  // namespace tig

#endif  // TIG_CORE_LATENT_H_
