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

#ifndef TIG_FITNESS_FITNESS_H_
#define TIG_FITNESS_FITNESS_H_

#include <cstddef>
#include <span>
#include <vector>

#include "tig/core/image.h"
#include "tig/core/types.h"

namespace tig {

class ClassifierUnderTest;

namespace fitness {

inline constexpr double kSoftmaxSumTolerance = 1e-4;

// Probabilities over n_classes, each in [0, 1], summing to 1 within
// kSoftmaxSumTolerance.
class SoftmaxVector {
 public:
  static SoftmaxVector FromProbabilities(std::vector<double> probabilities);
  // Numerically stable softmax (max subtraction).
  static SoftmaxVector FromLogits(std::span<const double> logits);

  std::span<const double> probabilities() const { return probabilities_; }
  std::size_t num_classes() const { return probabilities_.size(); }

 private:
  explicit SoftmaxVector(std::vector<double> p) : probabilities_(std::move(p)) {}
  std::vector<double> probabilities_;
};

struct EvaluationResult {
  ClassIndex predicted_label = 0;
  double fitness = 0.0;
};

// Lowest index wins ties.
ClassIndex ArgMax(std::span<const double> probabilities);

// sigma_expected - max_{i != expected} sigma_i. Negative means the
// classifier prefers some other class.
double FitnessFromSoftmax(std::span<const double> probabilities,
                          ClassIndex expected);

EvaluationResult Evaluate(const SoftmaxVector& softmax, ClassIndex expected);

// One batched classifier call; results are index-aligned with `images`.
std::vector<EvaluationResult> EvaluatePopulation(
    std::span<const Image> images, ClassifierUnderTest& classifier,
    ClassIndex expected);

}  // namespace fitness
}  // namespace tig

#endif  // TIG_FITNESS_FITNESS_H_
