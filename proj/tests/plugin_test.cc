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

#include <gtest/gtest.h>

#include "fakes.h"
#include "tig/adapters/decode.h"
#include "tig/adapters/registry.h"
#include "tig/core/key_value.h"

namespace tig::adapters {
namespace {

AdapterManifest PluginManifest(const std::string& family, const std::string& extra = "") {
  KeyValueFile v = KeyValueFile::Parse(
      "family = " + family +
      "\nlatent_dim = 4\nnum_classes = 3\nimage_height = 2\nimage_width = 2\n"
      "image_channels = 1\ngenerator = plugin\nclassifier = plugin\n"
      "prompt_template = a photo of a {class}\n" + extra);
  v.Set("plugin", TIG_TEST_PLUGIN);
  return AdapterManifest::FromValues(v, ".");
}

TEST(Plugin, DiffusionBackendUsesPhaseGuidance) {
  const AdapterManifest m = PluginManifest("dm");
  AdapterSet set = LoadAdapters(m);
  const SeedSpec seed{{0, 0, 0, 0}, 0, ModelFamily::kDm, "a photo of a 0", 0};
  const std::vector<LatentVector> z = {seed.latent};
  const Image s = Decode(*set.generator, z, DecodeContext::ForSeed(seed, DecodePhase::kSeed))[0];
  const Image m2 =
      Decode(*set.generator, z, DecodeContext::ForSeed(seed, DecodePhase::kMutation))[0];
  EXPECT_FLOAT_EQ(s.pixels()[0], 0.35f);
  EXPECT_FLOAT_EQ(m2.pixels()[0], 0.14f);
  EXPECT_EQ(set.classifier->num_classes(), 3u);
}

TEST(Plugin, ManifestOverridesGuidance) {
  AdapterSet set = LoadAdapters(PluginManifest("dm", "guidance_seed = 5\nguidance_mutation = 2\n"));
  const SeedSpec seed{{0, 0, 0, 0}, 0, ModelFamily::kDm, "p", 0};
  const std::vector<LatentVector> z = {seed.latent};
  EXPECT_FLOAT_EQ(
      Decode(*set.generator, z, DecodeContext::ForSeed(seed, DecodePhase::kSeed))[0].pixels()[0],
      0.5f);
  EXPECT_FLOAT_EQ(Decode(*set.generator, z, DecodeContext::ForSeed(seed, DecodePhase::kMutation))[0]
                      .pixels()[0],
                  0.2f);
}

TEST(Plugin, GeneratorFactoryForOtherFamilies) {
  AdapterSet set = LoadAdapters(PluginManifest("gan"));
  const std::vector<LatentVector> z = {{0.25, 0, 0, 0}};
  EXPECT_FLOAT_EQ(Decode(*set.generator, z, {})[0].pixels()[0], 0.25f);
  EXPECT_FALSE(set.encoder);
}

TEST(Plugin, MissingLibraryIsAnAdapterError) {
  KeyValueFile v = KeyValueFile::Parse(
      "family = gan\nlatent_dim = 4\nnum_classes = 3\nimage_height = 2\nimage_width = 2\n"
      "image_channels = 1\ngenerator = plugin\nclassifier = plugin\nplugin = /nonexistent.so\n");
  testing::ExpectKind(ErrorKind::kAdapter,
                      [&] { LoadAdapters(AdapterManifest::FromValues(v, ".")); });
}

}  // namespace
}  // namespace tig::adapters
