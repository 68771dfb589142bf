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

#include "tig/core/errors.h"

namespace tig {

std::string_view ToString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kInvalidInput: return "invalid-input";
    case ErrorKind::kInvalidState: return "invalid-state";
    case ErrorKind::kDegenerateBounds: return "degenerate-bounds";
    case ErrorKind::kDegenerateCrossover: return "degenerate-crossover";
    case ErrorKind::kUndefinedRatio: return "undefined-ratio";
    case ErrorKind::kAdapter: return "adapter";
    case ErrorKind::kSlotExhausted: return "slot-exhausted";
    case ErrorKind::kDuplicateAssessor: return "duplicate-assessor";
    case ErrorKind::kNotFound: return "not-found";
    case ErrorKind::kIo: return "io";
    case ErrorKind::kParse: return "parse";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(ToString(kind)) + ": " + message),
      kind_(kind) {}

AdapterError::AdapterError(const std::string& message,
                           std::optional<std::size_t> index)
    : Error(ErrorKind::kAdapter,
            index ? message + " (item " + std::to_string(*index) + ")"
                  : message),
      index_(index) {}

}  // namespace tig
