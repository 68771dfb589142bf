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

#include <cmath>
#include <fstream>
#include <vector>

#include <gtest/gtest.h>

#include "fakes.h"
#include "tig/adapters/class_map.h"
#include "tig/adapters/decode.h"
#include "tig/adapters/diffusion.h"
#include "tig/adapters/io.h"
#include "tig/adapters/registry.h"
#include "tig/adapters/seeds.h"
#include "tig/adapters/toy.h"
#include "tig/core/random.h"
#include "tig/fitness/fitness.h"

namespace tig::adapters {
namespace {

using testing::ExpectKind;

const DecodeContext kToyContext{};

// Records the guidance it was asked to sample with; images encode the scale.
class RecordingBackend : public DiffusionBackend {
 public:
  explicit RecordingBackend(std::vector<DmDecodeContext>* log) : log_(log) {}
  std::size_t latent_dimension() const override { return 4; }
  ImageShape image_shape() const override { return {2, 2, 1}; }
  std::vector<Image> Sample(std::span<const LatentVector> latents,
                            const DmDecodeContext& context) override {
    log_->push_back(context);
    std::vector<Image> out;
    for (std::size_t i = 0; i < latents.size(); ++i) {
      out.emplace_back(image_shape(), std::vector<float>(4, float(context.guidance_scale / 10)));
    }
    return out;
  }

 private:
  std::vector<DmDecodeContext>* log_;
};

class OutOfRangeGenerator : public GeneratorModel {
 public:
  std::size_t latent_dimension() const override { return 2; }
  ImageShape image_shape() const override { return {1, 1, 2}; }
  std::vector<Image> DecodeBatch(std::span<const LatentVector> latents,
                                 const DecodeContext&) override {
    std::vector<Image> out;
    for (const LatentVector& z : latents) out.emplace_back(image_shape(), std::vector<float>{float(z[0]), 2.f});
    return out;
  }
};

TEST(IdentityGenerator, DecodesLatentAsPixels) {
  IdentityGenerator g(2);
  const std::vector<LatentVector> z = {{0.3, 0.7}};
  const auto images = Decode(g, z, kToyContext);
  ASSERT_EQ(images.size(), 1u);
  EXPECT_EQ(images[0].shape(), (ImageShape{1, 1, 2}));
  EXPECT_EQ(images[0].pixels()[0], 0.3f);
  EXPECT_EQ(images[0].pixels()[1], 0.7f);
  EXPECT_EQ(Decode(g, z, kToyContext), images);
}

TEST(Decode, BatchEqualsSerial) {
  IdentityGenerator g(3);
  Rng rng = MakeStream(1, 0, 0);
  std::vector<LatentVector> batch;
  for (int i = 0; i < 10; ++i) batch.push_back(SampleStandardNormal(3, rng));
  const auto all = Decode(g, batch, kToyContext);
  for (std::size_t i = 0; i < batch.size(); ++i) {
    EXPECT_EQ(Decode(g, std::span(&batch[i], 1), kToyContext)[0], all[i]);
  }
}

TEST(Decode, DimensionMismatchCarriesIndex) {
  IdentityGenerator g(2);
  const std::vector<LatentVector> z = {{0.1, 0.2}, {0.1, 0.2, 0.3}};
  try {
    Decode(g, z, kToyContext);
    FAIL();
  } catch (const AdapterError& e) {
    ASSERT_TRUE(e.index());
    EXPECT_EQ(*e.index(), 1u);
  }
}

TEST(Decode, UnitRangeEnforcedForImageGenerators) {
  OutOfRangeGenerator g;
  const std::vector<LatentVector> z = {{0.1, 0.2}};
  ExpectKind(ErrorKind::kAdapter, [&] { Decode(g, z, kToyContext); });
}

TEST(ToyOracleMargin, Examples) {
  const LinearBoundary b{{1.0, 0.0}, -0.5};
  EXPECT_EQ(ToyOracleMargin({0.5, 0.3}, b), 0.0);
  EXPECT_NEAR(ToyOracleMargin({1e4, 0.0}, b), 1.0, 1e-15);
  Rng rng = MakeStream(2, 0, 0);
  std::normal_distribution<double> n(0, 2);
  const LinearBoundary r{{0.8, -1.3}, 0.4};
  LogisticClassifier c(r);
  for (int i = 0; i < 500; ++i) {
    const LatentVector z = {n(rng), n(rng)};
    const double s = 1.0 / (1.0 + std::exp(-(0.8 * z[0] - 1.3 * z[1] + 0.4)));
    const double f = fitness::FitnessFromSoftmax(
        fitness::SoftmaxVector::FromProbabilities({s, 1 - s}).probabilities(), 0);
    EXPECT_NEAR(ToyOracleMargin(z, r), f, 1e-12);
  }
}

TEST(VaeSeed, IdentityEncoderRoundTrip) {
  IdentityEncoder enc(2);
  IdentityGenerator dec(2);
  const Image image({1, 1, 2}, {0.3f, 0.7f});
  const SeedSpec seed = VaeSeed(image, 4, enc);
  EXPECT_EQ(seed.family, ModelFamily::kVae);
  EXPECT_EQ(seed.expected_label, 4u);
  EXPECT_EQ(seed.latent, LatentVector({double(0.3f), double(0.7f)}));
  const auto back = Decode(dec, std::span(&seed.latent, 1), kToyContext);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_NEAR(back[0].pixels()[i], image.pixels()[i], 1e-6);
  ExpectKind(ErrorKind::kAdapter, [&] { VaeSeed(Image({1, 1, 3}, {0, 0, 0}), 0, enc); });
}

TEST(GanSeed, DeterministicAndNormal) {
  Rng a = MakeStream(3, 0, 0), b = MakeStream(3, 0, 0);
  const SeedSpec s1 = GanSeed(7, 10, 100, a);
  const SeedSpec s2 = GanSeed(7, 10, 100, b);
  EXPECT_EQ(s1.latent, s2.latent);
  EXPECT_EQ(s1.latent.dimension(), 100u);
  EXPECT_EQ(s1.condition_label, 7u);
  EXPECT_EQ(s1.expected_label, 7u);
  EXPECT_EQ(s1.family, ModelFamily::kGan);

  Rng rng = MakeStream(4, 0, 0);
  double sum = 0, sum_sq = 0;
  int count = 0;
  for (int i = 0; i < 100; ++i) {
    for (double v : GanSeed(0, 10, 100, rng).latent.values()) {
      sum += v;
      sum_sq += v * v;
      ++count;
    }
  }
  const double mean = sum / count;
  EXPECT_LT(std::abs(mean), 0.1);
  EXPECT_LT(std::abs(std::sqrt(sum_sq / count - mean * mean) - 1.0), 0.1);
  ExpectKind(ErrorKind::kInvalidArgument, [&] { GanSeed(10, 10, 100, rng); });
}

TEST(DmSeed, PromptAndLabel) {
  EXPECT_EQ(FillPrompt("a photo of a {class}", "pizza"), "a photo of a pizza");
  ExpectKind(ErrorKind::kInvalidArgument, [] { FillPrompt("a photo", "pizza"); });
  const ClassMap classes({"teddy bear", "pizza"});
  Rng rng = MakeStream(5, 0, 0);
  const SeedSpec seed = DmSeed("pizza", "a photo of a {class}", classes, 16, rng);
  EXPECT_EQ(seed.prompt, "a photo of a pizza");
  EXPECT_EQ(seed.expected_label, 1u);
  EXPECT_EQ(seed.family, ModelFamily::kDm);
  EXPECT_EQ(seed.latent.dimension(), 16u);
  ExpectKind(ErrorKind::kNotFound, [&] { DmSeed("taco", "a {class}", classes, 16, rng); });
}

TEST(DiffusionGenerator, GuidanceByPhase) {
  std::vector<DmDecodeContext> log;
  DiffusionGenerator g(std::make_unique<RecordingBackend>(&log), GuidancePolicy{});
  const SeedSpec seed{{0, 0, 0, 0}, 1, ModelFamily::kDm, "a photo of a pizza", 1};
  const std::vector<LatentVector> z = {seed.latent};
  const Image seed_image = Decode(g, z, DecodeContext::ForSeed(seed, DecodePhase::kSeed))[0];
  Decode(g, z, DecodeContext::ForSeed(seed, DecodePhase::kMutation));
  ASSERT_EQ(log.size(), 2u);
  EXPECT_EQ(log[0].guidance_scale, 3.5);
  EXPECT_EQ(log[1].guidance_scale, 1.4);
  EXPECT_EQ(log[0].prompt, "a photo of a pizza");
  EXPECT_EQ(log[0].denoising_steps, 25u);
  EXPECT_EQ(seed_image.pixels()[0], 0.35f);
  DecodeContext no_prompt = DecodeContext::ForSeed(seed, DecodePhase::kSeed);
  no_prompt.prompt.reset();
  EXPECT_THROW(Decode(g, z, no_prompt), Error);
  GuidancePolicy bad;
  bad.mutation_scale = 0.0;
  ExpectKind(ErrorKind::kInvalidArgument, [&] { bad.Validate(); });
}

TEST(ToySeed, CorrectSideWithMargin) {
  const LinearBoundary b{{1.0, 0.0}, -0.5};
  LogisticClassifier c(b);
  IdentityGenerator g(2);
  Rng rng = MakeStream(6, 0, 0);
  for (int i = 0; i < 300; ++i) {
    const SeedSpec seed = ToySeed(b, {}, rng);
    EXPECT_GE(std::abs(ToyOracleMargin(seed.latent, b)), 0.1);
    for (double v : seed.latent.values()) {
      EXPECT_GE(v, -1.0);
      EXPECT_LE(v, 1.0);
    }
    const auto eval = fitness::EvaluatePopulation(
        Decode(g, std::span(&seed.latent, 1), kToyContext), c, seed.expected_label);
    EXPECT_EQ(eval[0].predicted_label, seed.expected_label);
  }
}

TEST(ClassMap, ParseAndLookup) {
  const ClassMap m = ClassMap::Parse("# names\n1 dog\n0 cat\n2 teddy bear\n");
  EXPECT_EQ(m.size(), 3u);
  EXPECT_EQ(m.Name(2), "teddy bear");
  EXPECT_EQ(m.IndexOf("dog"), 1u);
  ExpectKind(ErrorKind::kNotFound, [&] { m.IndexOf("cow"); });
  ExpectKind(ErrorKind::kParse, [] { ClassMap::Parse("0 a\n2 b\n"); });
  ExpectKind(ErrorKind::kInvalidArgument, [] { ClassMap({"a", "a"}); });
  EXPECT_EQ(ClassMap::Digits().Name(7), "7");
}

TEST(LatentFile, RoundTripAndHeader) {
  testing::TempDir dir;
  const std::vector<LatentVector> z = {{0.5, -1.25, 3.0}, {1e-3, 2.0, -7.0}};
  WriteLatents(dir / "z.bin", z);
  EXPECT_EQ(std::filesystem::file_size(dir / "z.bin"), 8u + 2 * 3 * 4);
  std::ifstream in(dir / "z.bin", std::ios::binary);
  unsigned char header[8];
  in.read(reinterpret_cast<char*>(header), 8);
  EXPECT_EQ(std::string(reinterpret_cast<char*>(header), 4), "TIGL");
  EXPECT_EQ(header[4] | header[5] << 8 | header[6] << 16 | header[7] << 24, 3);
  const auto back = ReadLatents(dir / "z.bin");
  ASSERT_EQ(back.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(back[i][k], double(float(z[i][k])));
  }
}

TEST(Png, RoundTripQuantized) {
  testing::TempDir dir;
  std::vector<float> pixels;
  for (int i = 0; i < 4 * 3 * 3; ++i) pixels.push_back(float(i % 256) / 255.f);
  const Image image({4, 3, 3}, pixels);
  WritePng(dir / "x.png", image);
  const Image back = ReadPng(dir / "x.png");
  EXPECT_EQ(back.shape(), image.shape());
  for (std::size_t i = 0; i < pixels.size(); ++i) EXPECT_NEAR(back.pixels()[i], pixels[i], 0.5 / 255);
}

TEST(Idx, ReadsBundledHeldOutSplit) {
  const auto data = ReadIdx(TIG_MODELS_DIR "/mnist_small/heldout-images.idx3-ubyte",
                            TIG_MODELS_DIR "/mnist_small/heldout-labels.idx1-ubyte");
  ASSERT_EQ(data.images.size(), 1100u);
  ASSERT_EQ(data.labels.size(), 1100u);
  EXPECT_EQ(data.images[0].shape(), (ImageShape{28, 28, 1}));
  std::vector<int> per_class(10, 0);
  for (ClassIndex l : data.labels) ++per_class.at(l);
  for (int n : per_class) EXPECT_EQ(n, 110);
}

TEST(Registry, ToyManifest) {
  const auto m = AdapterManifest::Load(TIG_MODELS_DIR "/toy/manifest");
  EXPECT_EQ(m.family(), ModelFamily::kToy);
  EXPECT_EQ(m.latent_dim(), 2u);
  const AdapterSet set = LoadAdapters(m);
  EXPECT_EQ(set.generator->image_shape(), set.classifier->input_shape());
  ASSERT_TRUE(set.encoder);
  EXPECT_EQ(m.toy_boundary().weights, (std::vector<double>{1, 0}));
  EXPECT_EQ(m.toy_boundary().bias, -0.5);
}

TEST(Registry, RejectsInconsistentManifests) {
  KeyValueFile v = KeyValueFile::Parse(
      "family = toy\nlatent_dim = 3\nnum_classes = 2\ngenerator = toy_identity\n"
      "classifier = toy_logistic\ntoy_weights = 1, 0\n");
  ExpectKind(ErrorKind::kInvalidInput, [&] { LoadAdapters(AdapterManifest::FromValues(v, ".")); });
  v.Set("generator", "mystery");
  v.Set("toy_weights", "1, 0, 0");
  ExpectKind(ErrorKind::kParse, [&] { LoadAdapters(AdapterManifest::FromValues(v, ".")); });
  v.Set("family", "flow");
  ExpectKind(ErrorKind::kParse, [&] { AdapterManifest::FromValues(v, "."); });
}

}  // namespace
}  // namespace tig::adapters
