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

#ifndef TIG_CORE_KEY_VALUE_H_
#define TIG_CORE_KEY_VALUE_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tig {

// `key = value` text with `#` comments. Used for campaign configs, adapter
// manifests and per-seed outcome records. Keys are kept sorted so that
// serialization is canonical.
class KeyValueFile {
 public:
  KeyValueFile() = default;

  static KeyValueFile Parse(std::string_view text, const std::string& origin = "<text>");
  static KeyValueFile Load(const std::filesystem::path& path);

  std::string Serialize() const;
  // Write to a temporary sibling and rename into place.
  void SaveAtomically(const std::filesystem::path& path) const;

  bool Has(const std::string& key) const { return entries_.count(key) > 0; }
  void Set(const std::string& key, std::string value) { entries_[key] = std::move(value); }
  void SetDouble(const std::string& key, double value);
  void SetInt(const std::string& key, std::int64_t value);

  std::optional<std::string> Find(const std::string& key) const;
  std::string GetString(const std::string& key) const;
  std::string GetString(const std::string& key, const std::string& fallback) const;
  double GetDouble(const std::string& key) const;
  double GetDouble(const std::string& key, double fallback) const;
  std::int64_t GetInt(const std::string& key) const;
  std::int64_t GetInt(const std::string& key, std::int64_t fallback) const;
  std::uint64_t GetUint(const std::string& key, std::uint64_t fallback) const;
  bool GetBool(const std::string& key, bool fallback) const;
  std::vector<double> GetDoubleList(const std::string& key) const;

  const std::map<std::string, std::string>& entries() const { return entries_; }
  const std::string& origin() const { return origin_; }

 private:
  std::map<std::string, std::string> entries_;
  std::string origin_ = "<text>";
};

// Shortest decimal text that parses back to the same double.
std::string FormatDouble(double value);
double ParseDouble(std::string_view text);

}  // namespace tig

#endif  // TIG_CORE_KEY_VALUE_H_
