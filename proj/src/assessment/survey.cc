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

#include "tig/assessment/survey.h"

#include <algorithm>
#include <numeric>

#include "tig/core/errors.h"

namespace tig::assessment {
namespace {

adapters::ClassMap Cifar10() {
  return adapters::ClassMap({"airplane", "automobile", "bird", "cat", "deer", "dog", "frog",
                             "horse", "ship", "truck"});
}

AnswerOption ClassOption(const TaskSpec& task, ClassIndex label) {
  return {"class:" + std::to_string(label), task.classes.Name(label), OptionKind::kClass,
          label};
}

}  // namespace

std::string_view ToString(OptionKind kind) {
  switch (kind) {
    case OptionKind::kClass:
      return "class";
    case OptionKind::kOtherInDomain:
      return "other_in_domain";
    case OptionKind::kInvalid:
      return "invalid";
  }
  return "?";
}

OptionKind ParseOptionKind(std::string_view text) {
  for (OptionKind kind : {OptionKind::kClass, OptionKind::kOtherInDomain, OptionKind::kInvalid}) {
    if (ToString(kind) == text) return kind;
  }
  throw Error(ErrorKind::kParse, "unknown option kind '" + std::string(text) + "'");
}

TaskSpec TaskSpec::ForTask(std::string_view task, std::optional<adapters::ClassMap> classes) {
  TaskSpec spec;
  spec.id = std::string(task);
  if (task == "mnist") {
    spec.classes = classes.value_or(adapters::ClassMap::Digits());
    spec.invalid_text = "Not a handwritten digit";
  } else if (task == "svhn") {
    spec.classes = classes.value_or(adapters::ClassMap::Digits());
    spec.invalid_text = "Not a house number";
  } else if (task == "cifar10") {
    spec.classes = classes.value_or(Cifar10());
    spec.invalid_text = "Not a real-world object";
  } else if (task == "imagenet") {
    if (!classes) {
      throw Error(ErrorKind::kInvalidArgument, "imagenet surveys need a class map");
    }
    spec.classes = std::move(*classes);
    spec.invalid_text = "No real-world objects";
    spec.other_text = "Another real-world object";
    spec.distractor_options = true;
  } else {
    throw Error(ErrorKind::kInvalidArgument, "unknown task '" + std::string(task) + "'");
  }
  return spec;
}

const AnswerOption* Question::FindOption(std::string_view option_id) const {
  for (const AnswerOption& option : options) {
    if (option.id == option_id) return &option;
  }
  return nullptr;
}

const Question* Survey::FindQuestion(std::string_view question_id) const {
  for (const Question& question : questions) {
    if (question.id == question_id) return &question;
  }
  return nullptr;
}

std::vector<ClassIndex> PredictionRanking(std::span<const ImageItem> images,
                                          std::size_t num_classes) {
  std::vector<std::size_t> counts(num_classes, 0);
  for (const ImageItem& item : images) {
    if (item.predicted_label && *item.predicted_label < num_classes) {
      ++counts[*item.predicted_label];
    }
  }
  std::vector<ClassIndex> ranking(num_classes);
  std::iota(ranking.begin(), ranking.end(), ClassIndex{0});
  std::stable_sort(ranking.begin(), ranking.end(),
                   [&](ClassIndex a, ClassIndex b) { return counts[a] > counts[b]; });
  return ranking;
}

std::vector<AnswerOption> BuildOptions(const TaskSpec& task, ClassIndex expected,
                                       std::span<const ClassIndex> ranking) {
  std::vector<AnswerOption> options;
  if (!task.distractor_options) {
    for (ClassIndex label = 0; label < task.classes.size(); ++label) {
      options.push_back(ClassOption(task, label));
    }
  } else {
    options.push_back(ClassOption(task, expected));
    for (ClassIndex label : ranking) {
      if (options.size() == 1 + kImageNetDistractors) break;
      if (label != expected) options.push_back(ClassOption(task, label));
    }
    options.push_back({"other", task.other_text, OptionKind::kOtherInDomain, std::nullopt});
  }
  options.push_back({"invalid", task.invalid_text, OptionKind::kInvalid, std::nullopt});
  return options;
}

std::vector<Survey> BuildSurveys(std::span<const ImageItem> images, const TaskSpec& task,
                                 std::span<const ImageItem> acq_pool, Rng& rng,
                                 std::size_t survey_size) {
  if (images.empty()) throw Error(ErrorKind::kInvalidArgument, "no images to survey");
  if (acq_pool.empty()) throw Error(ErrorKind::kInvalidArgument, "empty attention-check pool");
  if (survey_size == 0) throw Error(ErrorKind::kInvalidArgument, "survey size must be positive");
  for (const ImageItem& item : images) {
    if (item.expected_label >= task.classes.size()) {
      throw Error(ErrorKind::kInvalidArgument, "expected label outside the task's classes");
    }
  }

  std::vector<ClassIndex> ranking;
  if (task.distractor_options) ranking = PredictionRanking(images, task.classes.size());

  std::vector<std::size_t> order(images.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<Survey> surveys;
  for (std::size_t start = 0; start < order.size(); start += survey_size) {
    const std::size_t end = std::min(start + survey_size, order.size());
    std::vector<ImageItem> items;
    for (std::size_t i = start; i < end; ++i) items.push_back(images[order[i]]);

    std::uniform_int_distribution<std::size_t> pick(0, acq_pool.size() - 1);
    std::uniform_int_distribution<std::size_t> position(0, items.size());
    const std::size_t acq_at = position(rng);
    items.insert(items.begin() + static_cast<std::ptrdiff_t>(acq_at), acq_pool[pick(rng)]);

    Survey survey;
    survey.id = "s" + std::to_string(surveys.size());
    survey.task = task.id;
    survey.acq_index = acq_at;
    for (std::size_t q = 0; q < items.size(); ++q) {
      survey.questions.push_back({"q" + std::to_string(q), items[q].image_ref,
                                  items[q].expected_label,
                                  BuildOptions(task, items[q].expected_label, ranking)});
    }
    surveys.push_back(std::move(survey));
  }
  return surveys;
}

void MaterializeImages(std::vector<Survey>& surveys, const std::filesystem::path& source_root,
                       const std::filesystem::path& store_dir) {
  const std::filesystem::path images_dir = store_dir / "images";
  std::filesystem::create_directories(images_dir);
  for (Survey& survey : surveys) {
    for (Question& question : survey.questions) {
      std::filesystem::path source(question.image_ref);
      if (source.is_relative()) source = source_root / source;
      const std::string name = survey.id + "_" + question.id + source.extension().string();
      std::filesystem::copy_file(source, images_dir / name,
                                 std::filesystem::copy_options::overwrite_existing);
      question.image_ref = "images/" + name;
    }
  }
}

}  // namespace tig::assessment
