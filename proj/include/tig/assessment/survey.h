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

#ifndef TIG_ASSESSMENT_SURVEY_H_
#define TIG_ASSESSMENT_SURVEY_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tig/adapters/class_map.h"
#include "tig/core/random.h"
#include "tig/core/types.h"

namespace tig::assessment {

inline constexpr std::size_t kDefaultSurveySize = 10;
inline constexpr std::size_t kImageNetDistractors = 8;

enum class OptionKind { kClass, kOtherInDomain, kInvalid };

std::string_view ToString(OptionKind kind);
OptionKind ParseOptionKind(std::string_view text);

// One selectable answer. Ids are stable across option reorderings:
// "class:<label>", "other" or "invalid".
struct AnswerOption {
  std::string id;
  std::string label;
  OptionKind kind = OptionKind::kClass;
  std::optional<ClassIndex> class_index;

  bool in_domain() const { return kind != OptionKind::kInvalid; }
  friend bool operator==(const AnswerOption&, const AnswerOption&) = default;
};

// Answer options for a task. Small-label tasks list every class; ImageNet
// style tasks list the expected class, distractors and two catch-alls.
struct TaskSpec {
  std::string id;
  adapters::ClassMap classes;
  std::string invalid_text;
  bool distractor_options = false;
  std::string other_text;  // distractor tasks only

  // mnist, svhn, cifar10 (built-in class names) or imagenet (needs
  // `classes`). Throws kInvalidArgument for other ids.
  static TaskSpec ForTask(std::string_view task,
                          std::optional<adapters::ClassMap> classes = std::nullopt);
};

// An image to be judged. `predicted_label` feeds distractor selection.
struct ImageItem {
  std::string image_ref;
  ClassIndex expected_label = 0;
  std::optional<ClassIndex> predicted_label;

  friend bool operator==(const ImageItem&, const ImageItem&) = default;
};

struct Question {
  std::string id;
  std::string image_ref;
  ClassIndex expected_label = 0;
  std::vector<AnswerOption> options;

  const AnswerOption* FindOption(std::string_view option_id) const;
  friend bool operator==(const Question&, const Question&) = default;
};

struct Survey {
  std::string id;
  std::string task;
  std::vector<Question> questions;
  std::size_t acq_index = 0;
  std::size_t slots = 2;

  const Question& acq() const { return questions.at(acq_index); }
  const Question* FindQuestion(std::string_view question_id) const;
  friend bool operator==(const Survey&, const Survey&) = default;
};

// Labels ordered by how often they were predicted over `images`, most
// frequent first, lower label on ties; labels never predicted follow in
// label order.
std::vector<ClassIndex> PredictionRanking(std::span<const ImageItem> images,
                                          std::size_t num_classes);

std::vector<AnswerOption> BuildOptions(const TaskSpec& task, ClassIndex expected,
                                       std::span<const ClassIndex> ranking);

// Partitions `images` (shuffled) into surveys of at most `survey_size`
// questions plus one attention check drawn from `acq_pool`, inserted at a
// random position.
std::vector<Survey> BuildSurveys(std::span<const ImageItem> images, const TaskSpec& task,
                                 std::span<const ImageItem> acq_pool, Rng& rng,
                                 std::size_t survey_size = kDefaultSurveySize);

// Copies every question image into `store_dir`/images under an opaque name
// and rewrites image refs to be relative to `store_dir`. Source refs are
// resolved against `source_root` when relative.
void MaterializeImages(std::vector<Survey>& surveys, const std::filesystem::path& source_root,
                       const std::filesystem::path& store_dir);

}  // namespace tig::assessment

#endif  // TIG_ASSESSMENT_SURVEY_H_
