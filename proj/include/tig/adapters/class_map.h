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

#ifndef TIG_ADAPTERS_CLASS_MAP_H_
#define TIG_ADAPTERS_CLASS_MAP_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tig/core/types.h"

namespace tig::adapters {

// Class name <-> label mapping. File format: one `<index> <name>` pair per
// line, indices 0..n-1 each exactly once; `#` starts a comment.
class ClassMap {
 public:
  ClassMap() = default;
  explicit ClassMap(std::vector<std::string> names);

  static ClassMap Load(const std::filesystem::path& path);
  static ClassMap Parse(std::string_view text);
  static ClassMap Digits();

  std::size_t size() const { return names_.size(); }
  const std::string& Name(ClassIndex label) const;
  ClassIndex IndexOf(std::string_view name) const;
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
};

}  // namespace tig::adapters

#endif  // TIG_ADAPTERS_CLASS_MAP_H_
