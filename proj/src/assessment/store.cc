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

#include "tig/assessment/store.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tig/core/errors.h"

namespace tig::assessment {
namespace {

using nlohmann::json;

json OptionJson(const AnswerOption& option) {
  json j = {{"id", option.id}, {"label", option.label}, {"kind", ToString(option.kind)}};
  if (option.class_index) j["class_index"] = *option.class_index;
  return j;
}

AnswerOption OptionFromJson(const json& j) {
  AnswerOption option;
  option.id = j.at("id").get<std::string>();
  option.label = j.at("label").get<std::string>();
  option.kind = ParseOptionKind(j.at("kind").get<std::string>());
  if (j.contains("class_index")) option.class_index = j.at("class_index").get<ClassIndex>();
  return option;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

template <typename Fn>
auto ParseJson(std::string_view what, Fn fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kParse, std::string(what) + ": " + e.what());
  }
}

}  // namespace

std::string SurveysToJson(const std::vector<Survey>& surveys) {
  json out = json::array();
  for (const Survey& survey : surveys) {
    json questions = json::array();
    for (const Question& q : survey.questions) {
      json options = json::array();
      for (const AnswerOption& option : q.options) options.push_back(OptionJson(option));
      questions.push_back({{"id", q.id},
                           {"image", q.image_ref},
                           {"expected_label", q.expected_label},
                           {"options", std::move(options)}});
    }
    out.push_back({{"id", survey.id},
                   {"task", survey.task},
                   {"acq_index", survey.acq_index},
                   {"slots", survey.slots},
                   {"questions", std::move(questions)}});
  }
  return out.dump(2) + "\n";
}

std::vector<Survey> SurveysFromJson(std::string_view text) {
  return ParseJson("surveys", [&] {
    std::vector<Survey> surveys;
    for (const json& s : json::parse(text)) {
      Survey survey;
      survey.id = s.at("id").get<std::string>();
      survey.task = s.at("task").get<std::string>();
      survey.acq_index = s.at("acq_index").get<std::size_t>();
      survey.slots = s.at("slots").get<std::size_t>();
      for (const json& q : s.at("questions")) {
        Question question;
        question.id = q.at("id").get<std::string>();
        question.image_ref = q.at("image").get<std::string>();
        question.expected_label = q.at("expected_label").get<ClassIndex>();
        for (const json& o : q.at("options")) question.options.push_back(OptionFromJson(o));
        survey.questions.push_back(std::move(question));
      }
      if (survey.acq_index >= survey.questions.size()) {
        throw Error(ErrorKind::kParse, "survey " + survey.id + " has no attention check");
      }
      surveys.push_back(std::move(survey));
    }
    return surveys;
  });
}

std::string ResponseToJson(const Response& response) {
  return json{{"sequence", response.sequence},
              {"survey_id", response.survey_id},
              {"assessor_id", response.assessor_id},
              {"answers", response.answers},
              {"acq_passed", response.acq_passed}}
      .dump();
}

Response ResponseFromJson(std::string_view text) {
  return ParseJson("response", [&] {
    const json j = json::parse(text);
    Response response;
    response.sequence = j.at("sequence").get<std::size_t>();
    response.survey_id = j.at("survey_id").get<std::string>();
    response.assessor_id = j.at("assessor_id").get<std::string>();
    response.answers = j.at("answers").get<Answers>();
    response.acq_passed = j.at("acq_passed").get<bool>();
    return response;
  });
}

SurveyStore::SurveyStore(std::filesystem::path dir, std::vector<Survey> surveys,
                         std::vector<Response> responses)
    : dir_(std::move(dir)), surveys_(std::move(surveys)), responses_(std::move(responses)) {}

SurveyStore::SurveyStore(SurveyStore&& other) noexcept
    : dir_(std::move(other.dir_)),
      surveys_(std::move(other.surveys_)),
      responses_(std::move(other.responses_)) {}

SurveyStore SurveyStore::Create(const std::filesystem::path& dir, std::vector<Survey> surveys) {
  const std::filesystem::path surveys_path = dir / kSurveysName;
  if (std::filesystem::exists(surveys_path)) {
    throw Error(ErrorKind::kInvalidState, "survey store already exists in " + dir.string());
  }
  std::filesystem::create_directories(dir);
  const std::filesystem::path tmp = surveys_path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << SurveysToJson(surveys);
    if (!out) throw Error(ErrorKind::kIo, "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, surveys_path);
  std::ofstream(dir / kResponsesName, std::ios::app);
  return SurveyStore(dir, std::move(surveys), {});
}

SurveyStore SurveyStore::Open(const std::filesystem::path& dir) {
  std::vector<Survey> surveys = SurveysFromJson(ReadFile(dir / kSurveysName));
  std::vector<Response> responses;
  const std::filesystem::path log = dir / kResponsesName;
  if (std::filesystem::exists(log)) {
    std::istringstream lines(ReadFile(log));
    std::string line;
    while (std::getline(lines, line)) {
      if (!line.empty()) responses.push_back(ResponseFromJson(line));
    }
  }
  return SurveyStore(dir, std::move(surveys), std::move(responses));
}

const Survey& SurveyStore::survey(std::string_view id) const {
  for (const Survey& s : surveys_) {
    if (s.id == id) return s;
  }
  throw Error(ErrorKind::kNotFound, "no survey '" + std::string(id) + "'");
}

std::size_t SurveyStore::OpenSlots(std::string_view survey_id) const {
  const Survey& s = survey(survey_id);
  std::lock_guard lock(mutex_);
  std::size_t used = 0;
  for (const Response& r : responses_) used += r.survey_id == survey_id;
  return used >= s.slots ? 0 : s.slots - used;
}

bool SurveyStore::RecordResponse(std::string_view survey_id, std::string_view assessor_id,
                                 const Answers& answers) {
  const Survey& s = survey(survey_id);
  if (assessor_id.empty()) throw Error(ErrorKind::kInvalidInput, "assessor id is empty");
  for (const Question& q : s.questions) {
    auto it = answers.find(q.id);
    if (it == answers.end()) {
      throw Error(ErrorKind::kInvalidInput, "no answer for question " + q.id);
    }
    if (!q.FindOption(it->second)) {
      throw Error(ErrorKind::kInvalidInput,
                  "'" + it->second + "' is not an option of question " + q.id);
    }
  }
  if (answers.size() != s.questions.size()) {
    throw Error(ErrorKind::kInvalidInput, "answers name unknown questions");
  }

  const AnswerOption* acq_choice = s.acq().FindOption(answers.at(s.acq().id));
  const bool passed = acq_choice->class_index == s.acq().expected_label;

  std::lock_guard lock(mutex_);
  std::size_t used = 0;
  for (const Response& r : responses_) {
    if (r.survey_id != survey_id) continue;
    if (r.assessor_id == assessor_id) {
      throw Error(ErrorKind::kDuplicateAssessor, "assessor '" + std::string(assessor_id) +
                                                     "' already answered survey " + s.id);
    }
    ++used;
  }
  if (used >= s.slots) {
    throw Error(ErrorKind::kSlotExhausted, "survey " + s.id + " has no open slots");
  }

  Response response{responses_.size(), s.id, std::string(assessor_id), answers, passed};
  const std::string line = ResponseToJson(response) + "\n";
  std::ofstream out(dir_ / kResponsesName, std::ios::binary | std::ios::app);
  out.write(line.data(), static_cast<std::streamsize>(line.size()));
  out.flush();
  if (!out) throw Error(ErrorKind::kIo, "cannot append to the response log");
  responses_.push_back(std::move(response));
  return passed;
}

std::vector<Response> SurveyStore::responses() const {
  std::lock_guard lock(mutex_);
  return responses_;
}

}  // namespace tig::assessment
