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

#ifndef TIG_ADAPTERS_NN_H_
#define TIG_ADAPTERS_NN_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "tig/adapters/model.h"

namespace tig::adapters {

// Little-endian tensor archive ("TIGW"):
//   magic "TIGW" | u32 version (1) | u32 tensor count
//   per tensor: u32 name length | name | u32 rank | u32 dims[rank] | f32 data
// Data is row-major (PyTorch layout).
struct Tensor {
  std::vector<std::uint32_t> dims;
  std::vector<float> data;
};

class TensorArchive {
 public:
  static TensorArchive Load(const std::filesystem::path& path);

  const Tensor& Get(const std::string& name, std::span<const std::uint32_t> dims) const;
  const Tensor& Get(const std::string& name) const;

 private:
  std::map<std::string, Tensor> tensors_;
  std::string origin_;
};

// Dense layer y = W x + b, W stored [out, in].
struct DenseLayer {
  Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> weight;
  Eigen::VectorXf bias;

  static DenseLayer From(const Tensor& weight, const Tensor& bias);
  Eigen::VectorXf Apply(const Eigen::VectorXf& x) const;
};

// Fully-connected VAE with one hidden layer on each side:
//   encoder: x -> relu(enc_fc) -> enc_mu
//   decoder: z -> relu(dec_fc) -> sigmoid(dec_out)
// Every item is decoded on its own, so results do not depend on batch size.
class MlpVae : public GeneratorModel, public Encoder {
 public:
  MlpVae(const TensorArchive& weights, ImageShape image_shape);

  std::size_t latent_dimension() const override { return latent_dim_; }
  ImageShape image_shape() const override { return shape_; }
  ImageShape input_shape() const override { return shape_; }
  std::vector<Image> DecodeBatch(std::span<const LatentVector> latents,
                                 const DecodeContext& context) override;
  LatentVector EncodeMean(const Image& image) override;

 private:
  ImageShape shape_;
  std::size_t latent_dim_;
  DenseLayer enc_fc_, enc_mu_, dec_fc_, dec_out_;
};

// conv3x3(pad 1)-relu-maxpool2, twice, then dense-relu and a dense logit
// layer. Channel-major activations, matching the exported weights.
class ConvNetClassifier : public ClassifierUnderTest {
 public:
  ConvNetClassifier(const TensorArchive& weights, ImageShape input_shape);

  std::size_t num_classes() const override { return num_classes_; }
  ImageShape input_shape() const override { return shape_; }
  std::vector<fitness::SoftmaxVector> Classify(std::span<const Image> images) override;

  std::vector<double> Logits(const Image& image) const;

 private:
  struct Conv {
    std::size_t in_channels = 0, out_channels = 0;
    std::vector<float> weight;  // [out, in, 3, 3]
    std::vector<float> bias;
  };

  static std::vector<float> ConvReluPool(const Conv& conv, const std::vector<float>& input,
                                         std::size_t height, std::size_t width);

  ImageShape shape_;
  Conv conv1_, conv2_;
  DenseLayer fc1_, fc2_;
  std::size_t num_classes_;
};

}  // namespace tig::adapters

#endif  // TIG_ADAPTERS_NN_H_
