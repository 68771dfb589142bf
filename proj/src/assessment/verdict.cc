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

#include "tig/assessment/verdict.h"

#include <sstream>

#include "tig/core/errors.h"

namespace tig::assessment {
namespace {

// Quotes a CSV field when it contains a separator, quote or newline.
std::string CsvField(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

bool AssessmentRecord::eligible() const {
  return judgments.size() == 2 && judgments[0].acq_passed && judgments[1].acq_passed;
}

std::string_view ToString(Validity validity) {
  switch (validity) {
    case Validity::kValid:
      return "valid";
    case Validity::kInvalid:
      return "invalid";
    case Validity::kDisagreement:
      return "disagreement";
  }
  return "?";
}

std::vector<AssessmentRecord> BuildRecords(std::span<const Survey> surveys,
                                           std::span<const Response> responses) {
  std::vector<AssessmentRecord> records;
  for (const Survey& survey : surveys) {
    for (std::size_t q = 0; q < survey.questions.size(); ++q) {
      if (q == survey.acq_index) continue;
      const Question& question = survey.questions[q];
      AssessmentRecord record{survey.id, question.id, question.image_ref,
                              question.expected_label, {}};
      for (const Response& response : responses) {
        if (response.survey_id != survey.id) continue;
        auto it = response.answers.find(question.id);
        if (it == response.answers.end()) {
          throw Error(ErrorKind::kInvalidInput, "response lacks question " + question.id);
        }
        const AnswerOption* option = question.FindOption(it->second);
        if (!option) {
          throw Error(ErrorKind::kInvalidInput, "unknown option '" + it->second + "'");
        }
        record.judgments.push_back({response.assessor_id, *option, response.acq_passed});
      }
      records.push_back(std::move(record));
    }
  }
  return records;
}

ValidityVerdict Judge(const AssessmentRecord& record) {
  if (record.judgments.size() != 2) {
    throw Error(ErrorKind::kInvalidArgument, "a verdict needs exactly two judgments");
  }
  const AnswerOption& a = record.judgments[0].choice;
  const AnswerOption& b = record.judgments[1].choice;
  ValidityVerdict verdict{record.image_ref, Validity::kDisagreement, std::nullopt};
  if (a.in_domain() && b.in_domain()) {
    verdict.validity = Validity::kValid;
    verdict.preserved_label =
        a.class_index == record.expected_label && b.class_index == record.expected_label;
  } else if (!a.in_domain() && !b.in_domain()) {
    verdict.validity = Validity::kInvalid;
  }
  return verdict;
}

std::vector<ValidityVerdict> Verdicts(std::span<const AssessmentRecord> records) {
  std::vector<ValidityVerdict> verdicts;
  for (const AssessmentRecord& record : records) {
    if (record.eligible()) verdicts.push_back(Judge(record));
  }
  return verdicts;
}

CountRatio Rq4Validity(std::span<const ValidityVerdict> verdicts,
                       std::size_t misclassification_count) {
  CountRatio result;
  for (const ValidityVerdict& v : verdicts) result.count += v.validity == Validity::kValid;
  if (result.count > misclassification_count) {
    throw Error(ErrorKind::kInvalidArgument, "more valid verdicts than misclassifications");
  }
  if (misclassification_count > 0) {
    result.ratio = double(result.count) / double(misclassification_count);
  }
  return result;
}

CountRatio Rq5LabelPreservation(std::span<const ValidityVerdict> verdicts) {
  CountRatio result;
  std::size_t valid = 0;
  for (const ValidityVerdict& v : verdicts) {
    if (v.validity != Validity::kValid) continue;
    ++valid;
    result.count += v.preserved_label.value_or(false);
  }
  if (valid > 0) result.ratio = double(result.count) / double(valid);
  return result;
}

harness::HumanMetrics ToHumanMetrics(const SurveyStore& store) {
  const std::vector<Response> responses = store.responses();
  const std::vector<AssessmentRecord> records = BuildRecords(store.surveys(), responses);
  const std::vector<ValidityVerdict> verdicts = Verdicts(records);
  return {records.size(), Rq4Validity(verdicts, records.size()).count,
          Rq5LabelPreservation(verdicts).count};
}

std::string AssessmentCsv(std::span<const AssessmentRecord> records) {
  std::ostringstream out;
  out << "image,survey,question,expected_label,assessor_1,response_1,acq_1,"
         "assessor_2,response_2,acq_2,verdict,preserved\n";
  for (const AssessmentRecord& record : records) {
    out << CsvField(record.image_ref) << ',' << record.survey_id << ',' << record.question_id
        << ',' << record.expected_label;
    for (std::size_t i = 0; i < 2; ++i) {
      if (i < record.judgments.size()) {
        const Judgment& j = record.judgments[i];
        out << ',' << CsvField(j.assessor_id) << ',' << j.choice.id << ','
            << (j.acq_passed ? "pass" : "fail");
      } else {
        out << ",,,";
      }
    }
    if (record.eligible()) {
      const ValidityVerdict v = Judge(record);
      out << ',' << ToString(v.validity) << ','
          << (v.preserved_label ? (*v.preserved_label ? "true" : "false") : "");
    } else {
      out << ",excluded,";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace tig::assessment
