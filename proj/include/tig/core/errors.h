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

#ifndef TIG_CORE_ERRORS_H_
#define TIG_CORE_ERRORS_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tig {

enum class ErrorKind {
  kInvalidArgument,
  kInvalidInput,
  kInvalidState,
  kDegenerateBounds,
  kDegenerateCrossover,
  kUndefinedRatio,
  kAdapter,
  kSlotExhausted,
  kDuplicateAssessor,
  kNotFound,
  kIo,
  kParse,
};

std::string_view ToString(ErrorKind kind);

// All library failures surface as tig::Error; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by generator/classifier boundaries. `index` is the position of the
// offending item within the batch, when it is known.
class AdapterError : public Error {
 public:
  AdapterError(const std::string& message, std::optional<std::size_t> index);

  std::optional<std::size_t> index() const { return index_; }

 private:
  std::optional<std::size_t> index_;
};

}  // namespace tig

#endif  // TIG_CORE_ERRORS_H_
