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

#include "tig/adapters/class_map.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "tig/core/errors.h"

namespace tig::adapters {

ClassMap::ClassMap(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (std::count(names_.begin(), names_.end(), names_[i]) != 1) {
      throw Error(ErrorKind::kInvalidArgument, "duplicate class name '" + names_[i] + "'");
    }
  }
}

ClassMap ClassMap::Parse(std::string_view text) {
  std::map<std::size_t, std::string> by_index;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::size_t index = 0;
    if (!(fields >> index)) continue;
    std::string name;
    std::getline(fields, name);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t\r") + 1);
    if (name.empty() || !by_index.emplace(index, name).second) {
      throw Error(ErrorKind::kParse, "bad class map entry: " + line);
    }
  }
  std::vector<std::string> names;
  for (const auto& [index, name] : by_index) {
    if (index != names.size()) {
      throw Error(ErrorKind::kParse, "class map indices are not contiguous");
    }
    names.push_back(name);
  }
  return ClassMap(std::move(names));
}

ClassMap ClassMap::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open class map " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return Parse(text.str());
}

ClassMap ClassMap::Digits() {
  std::vector<std::string> names;
  for (int i = 0; i < 10; ++i) names.push_back(std::to_string(i));
  return ClassMap(std::move(names));
}

const std::string& ClassMap::Name(ClassIndex label) const {
  if (label >= names_.size()) {
    throw Error(ErrorKind::kInvalidArgument, "label " + std::to_string(label) + " not mapped");
  }
  return names_[label];
}

ClassIndex ClassMap::IndexOf(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) {
    throw Error(ErrorKind::kNotFound, "unmapped class name '" + std::string(name) + "'");
  }
  return static_cast<ClassIndex>(it - names_.begin());
}

}  // namespace tig::adapters
