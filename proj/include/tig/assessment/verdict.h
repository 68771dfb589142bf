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

#ifndef TIG_ASSESSMENT_VERDICT_H_
#define TIG_ASSESSMENT_VERDICT_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tig/assessment/store.h"
#include "tig/harness/metrics.h"

namespace tig::assessment {

struct Judgment {
  std::string assessor_id;
  AnswerOption choice;
  bool acq_passed = false;

  friend bool operator==(const Judgment&, const Judgment&) = default;
};

// All judgments of one surveyed image (attention checks excluded).
struct AssessmentRecord {
  std::string survey_id;
  std::string question_id;
  std::string image_ref;
  ClassIndex expected_label = 0;
  std::vector<Judgment> judgments;

  // Two judgments, both from assessors who passed the attention check.
  bool eligible() const;
};

enum class Validity { kValid, kInvalid, kDisagreement };

std::string_view ToString(Validity validity);

struct ValidityVerdict {
  std::string image_ref;
  Validity validity = Validity::kDisagreement;
  std::optional<bool> preserved_label;  // set for valid verdicts only

  friend bool operator==(const ValidityVerdict&, const ValidityVerdict&) = default;
};

struct CountRatio {
  std::size_t count = 0;
  std::optional<double> ratio;  // undefined on an empty denominator
};

std::vector<AssessmentRecord> BuildRecords(std::span<const Survey> surveys,
                                           std::span<const Response> responses);

// Verdict for a two-judgment record.
ValidityVerdict Judge(const AssessmentRecord& record);

// Verdicts for the eligible records, in record order.
std::vector<ValidityVerdict> Verdicts(std::span<const AssessmentRecord> records);

CountRatio Rq4Validity(std::span<const ValidityVerdict> verdicts,
                       std::size_t misclassification_count);
CountRatio Rq5LabelPreservation(std::span<const ValidityVerdict> verdicts);

// Counts for CampaignResult::human; the misclassification count is the
// number of surveyed images.
harness::HumanMetrics ToHumanMetrics(const SurveyStore& store);

// image,survey,question,expected_label,assessor_1,response_1,acq_1,
// assessor_2,response_2,acq_2,verdict,preserved
std::string AssessmentCsv(std::span<const AssessmentRecord> records);

}  // namespace tig::assessment

#endif  // TIG_ASSESSMENT_VERDICT_H_
