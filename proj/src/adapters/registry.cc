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

#include "tig/adapters/registry.h"

#include <dlfcn.h>

#include <mutex>
#include <unordered_map>

#include "tig/adapters/nn.h"
#include "tig/core/errors.h"

namespace tig::adapters {
namespace {

void* OpenPlugin(const std::filesystem::path& path) {
  static std::mutex mutex;
  static std::unordered_map<std::string, void*> handles;
  std::lock_guard lock(mutex);
  const std::string key = std::filesystem::absolute(path).string();
  if (auto it = handles.find(key); it != handles.end()) return it->second;
  void* handle = dlopen(key.c_str(), RTLD_NOW | RTLD_LOCAL);
  if (!handle) {
    throw AdapterError(std::string("cannot load plugin: ") + dlerror(), std::nullopt);
  }
  handles.emplace(key, handle);
  return handle;
}

template <typename Fn>
Fn FindSymbol(void* handle, const char* name) {
  return reinterpret_cast<Fn>(dlsym(handle, name));
}

template <typename Fn>
Fn RequireSymbol(void* handle, const char* name) {
  Fn fn = FindSymbol<Fn>(handle, name);
  if (!fn) throw AdapterError(std::string("plugin does not export ") + name, std::nullopt);
  return fn;
}

template <typename T>
std::shared_ptr<T> Own(T* raw, const char* what) {
  if (!raw) throw AdapterError(std::string("plugin returned no ") + what, std::nullopt);
  return std::shared_ptr<T>(raw);
}

}  // namespace

AdapterManifest AdapterManifest::Load(const std::filesystem::path& path) {
  return FromValues(KeyValueFile::Load(path), path.parent_path());
}

AdapterManifest AdapterManifest::FromValues(KeyValueFile values,
                                            std::filesystem::path base_dir) {
  AdapterManifest m;
  m.values_ = std::move(values);
  m.base_dir_ = std::move(base_dir);
  m.family_ = ParseModelFamily(m.values_.GetString("family"));
  const auto positive = [&](const std::string& key) {
    const std::int64_t v = m.values_.GetInt(key);
    if (v < 1) throw Error(ErrorKind::kParse, "manifest key '" + key + "' must be >= 1");
    return static_cast<std::size_t>(v);
  };
  m.latent_dim_ = positive("latent_dim");
  m.num_classes_ = positive("num_classes");
  if (m.family_ == ModelFamily::kToy) {
    m.image_shape_ = {1, 1, m.latent_dim_};
  } else {
    m.image_shape_ = {positive("image_height"), positive("image_width"),
                      positive("image_channels")};
  }
  return m;
}

std::filesystem::path AdapterManifest::ResolvePath(const std::string& key) const {
  std::filesystem::path p = values_.GetString(key);
  return p.is_absolute() ? p : base_dir_ / p;
}

ClassMap AdapterManifest::classes() const {
  if (values_.Has("class_map")) {
    ClassMap map = ClassMap::Load(ResolvePath("class_map"));
    if (map.size() != num_classes_) {
      throw Error(ErrorKind::kInvalidInput, "class map size differs from num_classes");
    }
    return map;
  }
  if (num_classes_ == 10) return ClassMap::Digits();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < num_classes_; ++i) names.push_back(std::to_string(i));
  return ClassMap(std::move(names));
}

GuidancePolicy AdapterManifest::guidance() const {
  GuidancePolicy policy;
  policy.seed_scale = values_.GetDouble("guidance_seed", policy.seed_scale);
  policy.mutation_scale = values_.GetDouble("guidance_mutation", policy.mutation_scale);
  policy.denoising_steps = static_cast<std::size_t>(
      values_.GetInt("denoising_steps", static_cast<std::int64_t>(policy.denoising_steps)));
  policy.Validate();
  return policy;
}

LinearBoundary AdapterManifest::toy_boundary() const {
  LinearBoundary boundary{values_.GetDoubleList("toy_weights"),
                          values_.GetDouble("toy_bias", 0.0)};
  if (boundary.weights.size() != latent_dim_) {
    throw Error(ErrorKind::kInvalidInput, "toy_weights length differs from latent_dim");
  }
  return boundary;
}

ToySeedRegion AdapterManifest::toy_seed_region() const {
  ToySeedRegion region;
  region.low = values_.GetDouble("toy_seed_low", region.low);
  region.high = values_.GetDouble("toy_seed_high", region.high);
  region.min_margin = values_.GetDouble("toy_min_margin", region.min_margin);
  return region;
}

AdapterSet LoadAdapters(const AdapterManifest& manifest) {
  const KeyValueFile& v = manifest.values();
  AdapterSet set;
  void* plugin = nullptr;
  auto plugin_handle = [&] {
    if (!plugin) plugin = OpenPlugin(manifest.ResolvePath("plugin"));
    return plugin;
  };

  std::shared_ptr<MlpVae> vae;
  auto load_vae = [&] {
    if (!vae) {
      vae = std::make_shared<MlpVae>(
          TensorArchive::Load(manifest.ResolvePath("generator_weights")),
          manifest.image_shape());
    }
    return vae;
  };

  const std::string generator = v.GetString("generator");
  if (generator == "toy_identity") {
    set.generator = std::make_shared<IdentityGenerator>(manifest.latent_dim());
  } else if (generator == "mlp_vae") {
    set.generator = load_vae();
  } else if (generator == "plugin") {
    void* handle = plugin_handle();
    if (manifest.family() == ModelFamily::kDm) {
      if (auto make_backend = FindSymbol<TigCreateDiffusionBackendFn>(
              handle, "tig_plugin_create_diffusion_backend")) {
        std::unique_ptr<DiffusionBackend> backend(make_backend(&manifest));
        if (!backend) throw AdapterError("plugin returned no diffusion backend", std::nullopt);
        set.generator =
            std::make_shared<DiffusionGenerator>(std::move(backend), manifest.guidance());
      }
    }
    if (!set.generator) {
      set.generator = Own(RequireSymbol<TigCreateGeneratorFn>(
                              handle, "tig_plugin_create_generator")(&manifest),
                          "generator");
    }
  } else {
    throw Error(ErrorKind::kParse, "unknown generator kind '" + generator + "'");
  }

  const std::string classifier = v.GetString("classifier");
  if (classifier == "toy_logistic") {
    set.classifier = std::make_shared<LogisticClassifier>(manifest.toy_boundary());
  } else if (classifier == "convnet") {
    set.classifier = std::make_shared<ConvNetClassifier>(
        TensorArchive::Load(manifest.ResolvePath("classifier_weights")),
        manifest.image_shape());
  } else if (classifier == "plugin") {
    set.classifier = Own(RequireSymbol<TigCreateClassifierFn>(
                             plugin_handle(), "tig_plugin_create_classifier")(&manifest),
                         "classifier");
  } else {
    throw Error(ErrorKind::kParse, "unknown classifier kind '" + classifier + "'");
  }

  const std::string default_encoder = generator == "mlp_vae"        ? "mlp_vae"
                                      : generator == "toy_identity" ? "identity"
                                                                    : "none";
  const std::string encoder = v.GetString("encoder", default_encoder);
  if (encoder == "identity") {
    set.encoder = std::make_shared<IdentityEncoder>(manifest.latent_dim());
  } else if (encoder == "mlp_vae") {
    set.encoder = load_vae();
  } else if (encoder == "plugin") {
    set.encoder = Own(RequireSymbol<TigCreateEncoderFn>(plugin_handle(),
                                                        "tig_plugin_create_encoder")(&manifest),
                      "encoder");
  } else if (encoder != "none") {
    throw Error(ErrorKind::kParse, "unknown encoder kind '" + encoder + "'");
  }

  if (set.generator->latent_dimension() != manifest.latent_dim()) {
    throw Error(ErrorKind::kInvalidInput, "generator dimension differs from latent_dim");
  }
  if (!(set.generator->image_shape() == set.classifier->input_shape())) {
    throw Error(ErrorKind::kInvalidInput,
                "generator output shape differs from classifier input shape");
  }
  if (set.classifier->num_classes() != manifest.num_classes()) {
    throw Error(ErrorKind::kInvalidInput, "classifier class count differs from num_classes");
  }
  return set;
}

}  // namespace tig::adapters
