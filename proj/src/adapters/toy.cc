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

#include "tig/adapters/toy.h"

#include <cmath>
#include <string>

#include "tig/core/errors.h"

namespace tig::adapters {

IdentityGenerator::IdentityGenerator(std::size_t dimension) : dimension_(dimension) {
  if (dimension_ == 0) throw Error(ErrorKind::kInvalidArgument, "dimension must be >= 1");
}

std::vector<Image> IdentityGenerator::DecodeBatch(std::span<const LatentVector> latents,
                                                  const DecodeContext&) {
  std::vector<Image> images;
  images.reserve(latents.size());
  for (const LatentVector& z : latents) {
    images.emplace_back(image_shape(),
                        std::vector<float>(z.values().begin(), z.values().end()));
  }
  return images;
}

LatentVector IdentityEncoder::EncodeMean(const Image& image) {
  if (!(image.shape() == input_shape())) {
    throw AdapterError("identity encoder expects a 1x1x" + std::to_string(dimension_) +
                           " image",
                       std::nullopt);
  }
  return LatentVector(std::vector<double>(image.pixels().begin(), image.pixels().end()));
}

double LinearBoundary::Activation(std::span<const double> x) const {
  if (x.size() != weights.size()) {
    throw Error(ErrorKind::kInvalidArgument, "boundary dimension mismatch");
  }
  double a = bias;
  for (std::size_t i = 0; i < x.size(); ++i) a += weights[i] * x[i];
  return a;
}

double Sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

LogisticClassifier::LogisticClassifier(LinearBoundary boundary)
    : boundary_(std::move(boundary)) {
  if (boundary_.weights.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "logistic classifier needs weights");
  }
}

std::vector<fitness::SoftmaxVector> LogisticClassifier::Classify(
    std::span<const Image> images) {
  std::vector<fitness::SoftmaxVector> rows;
  rows.reserve(images.size());
  for (const Image& image : images) {
    std::vector<double> x(image.pixels().begin(), image.pixels().end());
    const double p0 = Sigmoid(boundary_.Activation(x));
    rows.push_back(fitness::SoftmaxVector::FromProbabilities({p0, 1.0 - p0}));
  }
  return rows;
}

double ToyOracleMargin(const LatentVector& latent, const LinearBoundary& boundary) {
  return 2.0 * Sigmoid(boundary.Activation(latent.values())) - 1.0;
}

}  // namespace tig::adapters
