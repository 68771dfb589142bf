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

#ifndef TIG_ASSESSMENT_STORE_H_
#define TIG_ASSESSMENT_STORE_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "tig/assessment/survey.h"

namespace tig::assessment {

// question id -> option id
using Answers = std::map<std::string, std::string>;

struct Response {
  std::size_t sequence = 0;
  std::string survey_id;
  std::string assessor_id;
  Answers answers;
  bool acq_passed = false;

  friend bool operator==(const Response&, const Response&) = default;
};

// Surveys plus the raw response log. On disk:
//   surveys.json      survey definitions, including the attention-check index
//   responses.jsonl   one response object per line, append-only
//   images/           question images
// Each accepted submission claims one of the survey's slots whether or not
// it passed the attention check. Thread-safe.
class SurveyStore {
 public:
  static constexpr char kSurveysName[] = "surveys.json";
  static constexpr char kResponsesName[] = "responses.jsonl";

  // Writes a new store; fails if `dir` already holds one.
  static SurveyStore Create(const std::filesystem::path& dir, std::vector<Survey> surveys);
  static SurveyStore Open(const std::filesystem::path& dir);

  SurveyStore(SurveyStore&& other) noexcept;

  const std::filesystem::path& dir() const { return dir_; }
  const std::vector<Survey>& surveys() const { return surveys_; }
  const Survey& survey(std::string_view id) const;

  // Returns whether the attention check was passed. Throws kNotFound,
  // kDuplicateAssessor, kSlotExhausted, or kInvalidInput when the answers do
  // not cover every question with one of its options.
  bool RecordResponse(std::string_view survey_id, std::string_view assessor_id,
                      const Answers& answers);

  std::size_t OpenSlots(std::string_view survey_id) const;
  std::vector<Response> responses() const;

 private:
  SurveyStore(std::filesystem::path dir, std::vector<Survey> surveys,
              std::vector<Response> responses);

  std::filesystem::path dir_;
  std::vector<Survey> surveys_;
  mutable std::mutex mutex_;
  std::vector<Response> responses_;
};

std::string SurveysToJson(const std::vector<Survey>& surveys);
std::vector<Survey> SurveysFromJson(std::string_view text);
std::string ResponseToJson(const Response& response);
Response ResponseFromJson(std::string_view text);

}  // namespace tig::assessment

#endif  // TIG_ASSESSMENT_STORE_H_
