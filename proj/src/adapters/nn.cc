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

#include "tig/adapters/nn.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

#include "tig/core/errors.h"

namespace tig::adapters {
namespace {

std::uint32_t ReadU32(std::istream& in, const std::string& origin) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) {
    throw Error(ErrorKind::kParse, origin + ": truncated tensor archive");
  }
  return std::uint32_t{b[0]} | std::uint32_t{b[1]} << 8 | std::uint32_t{b[2]} << 16 |
         std::uint32_t{b[3]} << 24;
}

float DecodeFloat(const unsigned char* b) {
  const std::uint32_t bits = std::uint32_t{b[0]} | std::uint32_t{b[1]} << 8 |
                             std::uint32_t{b[2]} << 16 | std::uint32_t{b[3]} << 24;
  float f;
  std::memcpy(&f, &bits, sizeof(f));
  return f;
}

std::string DimsToString(std::span<const std::uint32_t> dims) {
  std::string s = "[";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(dims[i]);
  }
  return s + "]";
}

}  // namespace

TensorArchive TensorArchive::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open weights " + path.string());
  TensorArchive archive;
  archive.origin_ = path.string();
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, "TIGW", 4) != 0) {
    throw Error(ErrorKind::kParse, archive.origin_ + ": not a TIGW archive");
  }
  if (ReadU32(in, archive.origin_) != 1) {
    throw Error(ErrorKind::kParse, archive.origin_ + ": unsupported archive version");
  }
  const std::uint32_t count = ReadU32(in, archive.origin_);
  for (std::uint32_t t = 0; t < count; ++t) {
    std::string name(ReadU32(in, archive.origin_), '\0');
    if (!in.read(name.data(), static_cast<std::streamsize>(name.size()))) {
      throw Error(ErrorKind::kParse, archive.origin_ + ": truncated tensor name");
    }
    Tensor tensor;
    const std::uint32_t rank = ReadU32(in, archive.origin_);
    std::size_t elements = 1;
    for (std::uint32_t r = 0; r < rank; ++r) {
      tensor.dims.push_back(ReadU32(in, archive.origin_));
      elements *= tensor.dims.back();
    }
    std::vector<unsigned char> raw(elements * 4);
    if (!in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()))) {
      throw Error(ErrorKind::kParse, archive.origin_ + ": truncated data for " + name);
    }
    tensor.data.resize(elements);
    for (std::size_t i = 0; i < elements; ++i) tensor.data[i] = DecodeFloat(&raw[4 * i]);
    archive.tensors_.emplace(std::move(name), std::move(tensor));
  }
  return archive;
}

const Tensor& TensorArchive::Get(const std::string& name) const {
  auto it = tensors_.find(name);
  if (it == tensors_.end()) {
    throw Error(ErrorKind::kNotFound, origin_ + ": no tensor '" + name + "'");
  }
  return it->second;
}

const Tensor& TensorArchive::Get(const std::string& name,
                                 std::span<const std::uint32_t> dims) const {
  const Tensor& tensor = Get(name);
  if (!std::equal(dims.begin(), dims.end(), tensor.dims.begin(), tensor.dims.end())) {
    throw Error(ErrorKind::kInvalidInput, origin_ + ": tensor '" + name + "' has shape " +
                                              DimsToString(tensor.dims) + ", expected " +
                                              DimsToString(dims));
  }
  return tensor;
}

DenseLayer DenseLayer::From(const Tensor& weight, const Tensor& bias) {
  if (weight.dims.size() != 2 || bias.dims.size() != 1 || bias.dims[0] != weight.dims[0]) {
    throw Error(ErrorKind::kInvalidInput, "dense layer shapes are inconsistent");
  }
  DenseLayer layer;
  layer.weight = Eigen::Map<const Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic,
                                                Eigen::RowMajor>>(
      weight.data.data(), weight.dims[0], weight.dims[1]);
  layer.bias = Eigen::Map<const Eigen::VectorXf>(bias.data.data(), bias.dims[0]);
  return layer;
}

Eigen::VectorXf DenseLayer::Apply(const Eigen::VectorXf& x) const {
  return weight * x + bias;
}

MlpVae::MlpVae(const TensorArchive& weights, ImageShape image_shape)
    : shape_(image_shape),
      enc_fc_(DenseLayer::From(weights.Get("enc_fc.weight"), weights.Get("enc_fc.bias"))),
      enc_mu_(DenseLayer::From(weights.Get("enc_mu.weight"), weights.Get("enc_mu.bias"))),
      dec_fc_(DenseLayer::From(weights.Get("dec_fc.weight"), weights.Get("dec_fc.bias"))),
      dec_out_(DenseLayer::From(weights.Get("dec_out.weight"), weights.Get("dec_out.bias"))) {
  latent_dim_ = static_cast<std::size_t>(enc_mu_.weight.rows());
  if (static_cast<std::size_t>(enc_fc_.weight.cols()) != shape_.size() ||
      enc_mu_.weight.cols() != enc_fc_.weight.rows() ||
      static_cast<std::size_t>(dec_fc_.weight.cols()) != latent_dim_ ||
      dec_out_.weight.cols() != dec_fc_.weight.rows() ||
      static_cast<std::size_t>(dec_out_.weight.rows()) != shape_.size()) {
    throw Error(ErrorKind::kInvalidInput, "VAE weights do not fit the declared image shape");
  }
}

std::vector<Image> MlpVae::DecodeBatch(std::span<const LatentVector> latents,
                                       const DecodeContext&) {
  std::vector<Image> images;
  images.reserve(latents.size());
  for (const LatentVector& z : latents) {
    Eigen::VectorXf input(static_cast<Eigen::Index>(z.dimension()));
    for (std::size_t i = 0; i < z.dimension(); ++i) input[i] = static_cast<float>(z[i]);
    Eigen::VectorXf hidden = dec_fc_.Apply(input).cwiseMax(0.0f);
    Eigen::VectorXf out = dec_out_.Apply(hidden);
    std::vector<float> pixels(out.size());
    for (Eigen::Index i = 0; i < out.size(); ++i) {
      pixels[i] = 1.0f / (1.0f + std::exp(-out[i]));
    }
    images.emplace_back(shape_, std::move(pixels));
  }
  return images;
}

LatentVector MlpVae::EncodeMean(const Image& image) {
  if (!(image.shape() == shape_)) {
    throw AdapterError("VAE encoder input shape mismatch", std::nullopt);
  }
  Eigen::VectorXf x =
      Eigen::Map<const Eigen::VectorXf>(image.pixels().data(), image.pixels().size());
  Eigen::VectorXf mu = enc_mu_.Apply(enc_fc_.Apply(x).cwiseMax(0.0f));
  return LatentVector(std::vector<double>(mu.data(), mu.data() + mu.size()));
}

ConvNetClassifier::ConvNetClassifier(const TensorArchive& weights, ImageShape input_shape)
    : shape_(input_shape),
      fc1_(DenseLayer::From(weights.Get("fc1.weight"), weights.Get("fc1.bias"))),
      fc2_(DenseLayer::From(weights.Get("fc2.weight"), weights.Get("fc2.bias"))) {
  auto load_conv = [&](const std::string& prefix, std::size_t in_channels) {
    const Tensor& w = weights.Get(prefix + ".weight");
    if (w.dims.size() != 4 || w.dims[1] != in_channels || w.dims[2] != 3 || w.dims[3] != 3) {
      throw Error(ErrorKind::kInvalidInput, prefix + " must be [out, in, 3, 3]");
    }
    const std::uint32_t bias_dims[] = {w.dims[0]};
    Conv conv;
    conv.in_channels = in_channels;
    conv.out_channels = w.dims[0];
    conv.weight = w.data;
    conv.bias = weights.Get(prefix + ".bias", bias_dims).data;
    return conv;
  };
  if (shape_.height % 4 != 0 || shape_.width % 4 != 0) {
    throw Error(ErrorKind::kInvalidInput, "convnet input sides must be multiples of 4");
  }
  conv1_ = load_conv("conv1", shape_.channels);
  conv2_ = load_conv("conv2", conv1_.out_channels);
  const std::size_t flat = conv2_.out_channels * (shape_.height / 4) * (shape_.width / 4);
  if (static_cast<std::size_t>(fc1_.weight.cols()) != flat ||
      fc2_.weight.cols() != fc1_.weight.rows()) {
    throw Error(ErrorKind::kInvalidInput, "convnet dense layers do not fit the input shape");
  }
  num_classes_ = static_cast<std::size_t>(fc2_.weight.rows());
}

std::vector<float> ConvNetClassifier::ConvReluPool(const Conv& conv,
                                                   const std::vector<float>& input,
                                                   std::size_t height, std::size_t width) {
  const std::size_t plane = height * width;
  std::vector<float> activated(conv.out_channels * plane);
  for (std::size_t o = 0; o < conv.out_channels; ++o) {
    for (std::size_t y = 0; y < height; ++y) {
      for (std::size_t x = 0; x < width; ++x) {
        float acc = conv.bias[o];
        for (std::size_t c = 0; c < conv.in_channels; ++c) {
          const float* kernel = &conv.weight[((o * conv.in_channels) + c) * 9];
          const float* channel = &input[c * plane];
          for (int ky = -1; ky <= 1; ++ky) {
            const std::ptrdiff_t yy = static_cast<std::ptrdiff_t>(y) + ky;
            if (yy < 0 || yy >= static_cast<std::ptrdiff_t>(height)) continue;
            for (int kx = -1; kx <= 1; ++kx) {
              const std::ptrdiff_t xx = static_cast<std::ptrdiff_t>(x) + kx;
              if (xx < 0 || xx >= static_cast<std::ptrdiff_t>(width)) continue;
              acc += kernel[(ky + 1) * 3 + (kx + 1)] * channel[yy * width + xx];
            }
          }
        }
        activated[o * plane + y * width + x] = std::max(acc, 0.0f);
      }
    }
  }
  const std::size_t ph = height / 2, pw = width / 2;
  std::vector<float> pooled(conv.out_channels * ph * pw);
  for (std::size_t o = 0; o < conv.out_channels; ++o) {
    for (std::size_t y = 0; y < ph; ++y) {
      for (std::size_t x = 0; x < pw; ++x) {
        const float* base = &activated[o * plane + 2 * y * width + 2 * x];
        pooled[(o * ph + y) * pw + x] =
            std::max({base[0], base[1], base[width], base[width + 1]});
      }
    }
  }
  return pooled;
}

std::vector<double> ConvNetClassifier::Logits(const Image& image) const {
  if (!(image.shape() == shape_)) {
    throw AdapterError("convnet input shape mismatch", std::nullopt);
  }
  // HWC -> CHW
  const std::size_t plane = shape_.height * shape_.width;
  std::vector<float> chw(shape_.size());
  for (std::size_t p = 0; p < plane; ++p) {
    for (std::size_t c = 0; c < shape_.channels; ++c) {
      chw[c * plane + p] = image.pixels()[p * shape_.channels + c];
    }
  }
  std::vector<float> a = ConvReluPool(conv1_, chw, shape_.height, shape_.width);
  a = ConvReluPool(conv2_, a, shape_.height / 2, shape_.width / 2);
  Eigen::VectorXf flat = Eigen::Map<const Eigen::VectorXf>(a.data(), a.size());
  Eigen::VectorXf logits = fc2_.Apply(fc1_.Apply(flat).cwiseMax(0.0f));
  return std::vector<double>(logits.data(), logits.data() + logits.size());
}

std::vector<fitness::SoftmaxVector> ConvNetClassifier::Classify(
    std::span<const Image> images) {
  std::vector<fitness::SoftmaxVector> rows;
  rows.reserve(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    try {
      rows.push_back(fitness::SoftmaxVector::FromLogits(Logits(images[i])));
    } catch (const Error& e) {
      throw AdapterError(e.what(), i);
    }
  }
  return rows;
}

}  // namespace tig::adapters
