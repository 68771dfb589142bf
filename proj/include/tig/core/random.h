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

#ifndef TIG_CORE_RANDOM_H_
#define TIG_CORE_RANDOM_H_

#include <cstdint>
#include <random>

namespace tig {

using Rng = std::mt19937_64;

std::uint64_t SplitMix64(std::uint64_t x);

// Counter-based stream derivation: the stream for (master, purpose, index)
// depends only on those three values, never on how many other streams were
// drawn before it.
Rng MakeStream(std::uint64_t master_seed, std::uint64_t purpose,
               std::uint64_t index);

namespace stream {
inline constexpr std::uint64_t kBounds = 1;
inline constexpr std::uint64_t kSeedSampling = 2;
inline constexpr std::uint64_t kSearch = 3;
inline constexpr std::uint64_t kSurvey = 4;
}  // namespace stream

}  // namespace tig

#endif  // TIG_CORE_RANDOM_H_
