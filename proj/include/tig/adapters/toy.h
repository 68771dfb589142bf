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

#ifndef TIG_ADAPTERS_TOY_H_
#define TIG_ADAPTERS_TOY_H_

#include <cstddef>
#include <span>
#include <vector>

#include "tig/adapters/model.h"

namespace tig::adapters {

// Analytic generator/classifier pair with a closed-form fitness landscape.
// Used as the correctness oracle for the search engine.

// Latent z (dimension d) decodes to a 1 x 1 x d image holding z verbatim.
class IdentityGenerator : public GeneratorModel {
 public:
  explicit IdentityGenerator(std::size_t dimension);

  std::size_t latent_dimension() const override { return dimension_; }
  ImageShape image_shape() const override { return {1, 1, dimension_}; }
  bool unit_range_output() const override { return false; }
  std::vector<Image> DecodeBatch(std::span<const LatentVector> latents,
                                 const DecodeContext& context) override;

 private:
  std::size_t dimension_;
};

// Inverse of IdentityGenerator.
class IdentityEncoder : public Encoder {
 public:
  explicit IdentityEncoder(std::size_t dimension) : dimension_(dimension) {}

  std::size_t latent_dimension() const override { return dimension_; }
  ImageShape input_shape() const override { return {1, 1, dimension_}; }
  LatentVector EncodeMean(const Image& image) override;

 private:
  std::size_t dimension_;
};

struct LinearBoundary {
  std::vector<double> weights;
  double bias = 0.0;

  double Activation(std::span<const double> x) const;
};

// Binary logistic classifier: P(class 0) = sigmoid(w . x + b),
// P(class 1) = 1 - P(class 0).
class LogisticClassifier : public ClassifierUnderTest {
 public:
  explicit LogisticClassifier(LinearBoundary boundary);

  std::size_t num_classes() const override { return 2; }
  ImageShape input_shape() const override { return {1, 1, boundary_.weights.size()}; }
  std::vector<fitness::SoftmaxVector> Classify(std::span<const Image> images) override;

  const LinearBoundary& boundary() const { return boundary_; }

 private:
  LinearBoundary boundary_;
};

double Sigmoid(double x);

// 2 * sigmoid(w . z + b) - 1: the fitness of z under LogisticClassifier when
// the expected class is 0.
double ToyOracleMargin(const LatentVector& latent, const LinearBoundary& boundary);

}  // namespace tig::adapters

#endif  // TIG_ADAPTERS_TOY_H_
