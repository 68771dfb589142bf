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

#include "tig/core/key_value.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "tig/core/errors.h"

namespace tig {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string FormatDouble(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) throw Error(ErrorKind::kInvalidArgument, "unformattable double");
  return std::string(buffer, end);
}

double ParseDouble(std::string_view text) {
  text = Trim(text);
  double value = 0.0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw Error(ErrorKind::kParse, "not a number: '" + std::string(text) + "'");
  }
  return value;
}

KeyValueFile KeyValueFile::Parse(std::string_view text, const std::string& origin) {
  KeyValueFile file;
  file.origin_ = origin;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::kParse,
                  origin + ":" + std::to_string(line_number) + ": expected key = value");
    }
    const std::string key(Trim(line.substr(0, eq)));
    if (key.empty()) {
      throw Error(ErrorKind::kParse, origin + ":" + std::to_string(line_number) + ": empty key");
    }
    file.entries_[key] = std::string(Trim(line.substr(eq + 1)));
  }
  return file;
}

KeyValueFile KeyValueFile::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str(), path.string());
}

std::string KeyValueFile::Serialize() const {
  std::string out;
  for (const auto& [key, value] : entries_) {
    out += key;
    out += " = ";
    out += value;
    out += '\n';
  }
  return out;
}

void KeyValueFile::SaveAtomically(const std::filesystem::path& path) const {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::kIo, "cannot write " + tmp.string());
    out << Serialize();
    if (!out.flush()) throw Error(ErrorKind::kIo, "short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void KeyValueFile::SetDouble(const std::string& key, double value) {
  Set(key, FormatDouble(value));
}

void KeyValueFile::SetInt(const std::string& key, std::int64_t value) {
  Set(key, std::to_string(value));
}

std::optional<std::string> KeyValueFile::Find(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::string KeyValueFile::GetString(const std::string& key) const {
  auto value = Find(key);
  if (!value) throw Error(ErrorKind::kParse, origin_ + ": missing key '" + key + "'");
  return *value;
}

std::string KeyValueFile::GetString(const std::string& key,
                                    const std::string& fallback) const {
  return Find(key).value_or(fallback);
}

double KeyValueFile::GetDouble(const std::string& key) const {
  try {
    return ParseDouble(GetString(key));
  } catch (const Error& e) {
    throw Error(ErrorKind::kParse, origin_ + ": key '" + key + "': " + e.what());
  }
}

double KeyValueFile::GetDouble(const std::string& key, double fallback) const {
  return Has(key) ? GetDouble(key) : fallback;
}

std::int64_t KeyValueFile::GetInt(const std::string& key) const {
  const std::string text = GetString(key);
  std::int64_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw Error(ErrorKind::kParse, origin_ + ": key '" + key + "' is not an integer");
  }
  return value;
}

std::int64_t KeyValueFile::GetInt(const std::string& key, std::int64_t fallback) const {
  return Has(key) ? GetInt(key) : fallback;
}

std::uint64_t KeyValueFile::GetUint(const std::string& key, std::uint64_t fallback) const {
  if (!Has(key)) return fallback;
  const std::string text = GetString(key);
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw Error(ErrorKind::kParse,
                origin_ + ": key '" + key + "' is not a non-negative integer");
  }
  return value;
}

bool KeyValueFile::GetBool(const std::string& key, bool fallback) const {
  if (!Has(key)) return fallback;
  const std::string text = GetString(key);
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw Error(ErrorKind::kParse, origin_ + ": key '" + key + "' is not a boolean");
}

std::vector<double> KeyValueFile::GetDoubleList(const std::string& key) const {
  std::vector<double> values;
  std::string text = GetString(key);
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) values.push_back(ParseDouble(item));
  return values;
}

}  // namespace tig
