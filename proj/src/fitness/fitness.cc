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

#include "tig/fitness/fitness.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tig/adapters/model.h"
#include "tig/core/errors.h"

namespace tig::fitness {
namespace {

void CheckProbabilities(std::span<const double> p) {
  if (p.size() < 2) {
    throw Error(ErrorKind::kInvalidInput, "softmax needs at least two classes");
  }
  double sum = 0.0;
  for (double v : p) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorKind::kInvalidInput, "softmax entry outside [0, 1]");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSoftmaxSumTolerance) {
    throw Error(ErrorKind::kInvalidInput,
                "softmax sums to " + std::to_string(sum) + ", not 1");
  }
}

}  // namespace

SoftmaxVector SoftmaxVector::FromProbabilities(std::vector<double> probabilities) {
  CheckProbabilities(probabilities);
  return SoftmaxVector(std::move(probabilities));
}

SoftmaxVector SoftmaxVector::FromLogits(std::span<const double> logits) {
  if (logits.empty()) {
    throw Error(ErrorKind::kInvalidInput, "no logits");
  }
  const double peak = *std::max_element(logits.begin(), logits.end());
  std::vector<double> p(logits.size());
  double total = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    p[i] = std::exp(logits[i] - peak);
    total += p[i];
  }
  for (double& v : p) v /= total;
  return FromProbabilities(std::move(p));
}

ClassIndex ArgMax(std::span<const double> probabilities) {
  return static_cast<ClassIndex>(
      std::max_element(probabilities.begin(), probabilities.end()) -
      probabilities.begin());
}

double FitnessFromSoftmax(std::span<const double> probabilities,
                          ClassIndex expected) {
  if (expected >= probabilities.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "expected class " + std::to_string(expected) + " out of range");
  }
  CheckProbabilities(probabilities);
  double best_other = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    if (i != expected) best_other = std::max(best_other, probabilities[i]);
  }
  return probabilities[expected] - best_other;
}

EvaluationResult Evaluate(const SoftmaxVector& softmax, ClassIndex expected) {
  return {ArgMax(softmax.probabilities()),
          FitnessFromSoftmax(softmax.probabilities(), expected)};
}

std::vector<EvaluationResult> EvaluatePopulation(
    std::span<const Image> images, ClassifierUnderTest& classifier,
    ClassIndex expected) {
  const ImageShape shape = classifier.input_shape();
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!(images[i].shape() == shape)) {
      throw AdapterError("image shape does not match classifier input", i);
    }
  }
  if (images.empty()) return {};
  std::vector<SoftmaxVector> rows = classifier.Classify(images);
  if (rows.size() != images.size()) {
    throw AdapterError("classifier returned " + std::to_string(rows.size()) +
                           " rows for " + std::to_string(images.size()) + " images",
                       std::nullopt);
  }
  std::vector<EvaluationResult> results;
  results.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (expected >= rows[i].num_classes()) {
      throw AdapterError("classifier row is shorter than the expected class", i);
    }
    results.push_back(Evaluate(rows[i], expected));
  }
  return results;
}

}  // namespace tig::fitness
