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

#ifndef TIG_ASSESSMENT_SERVER_H_
#define TIG_ASSESSMENT_SERVER_H_

#include <memory>
#include <optional>
#include <string>

#include "tig/assessment/store.h"

namespace tig::assessment {

struct ServerOptions {
  // Required as the X-Admin-Token header on /api/admin/* when set.
  std::optional<std::string> admin_token;
  // Access-Control-Allow-Origin value; empty disables the header.
  std::string allow_origin = "*";
};

// HTTP API for assessors and administrators. JSON bodies throughout.
//
//   GET  /api/surveys                    {"surveys":[{"id","questions","open_slots"}]}
//                                        (surveys with open slots only)
//   GET  /api/surveys/<id>               {"id","questions":[{"id","image_url",
//                                        "options":[{"id","label"}]}]}
//   POST /api/surveys/<id>/responses     {"assessor_id","answers":{"<q>":"<option>"}}
//                                        201 {"survey_id","accepted"}
//                                        409 {"error":"duplicate_assessor"|"slot_exhausted"}
//   GET  /images/<file>                  question image
//   GET  /api/admin/verdicts             {"verdicts":[{"image","validity","preserved_label"}]}
//   GET  /api/admin/metrics              {"misclassifications","records","eligible",
//                                        "valid","invalid","disagreement",
//                                        "rq4":{"count","ratio"},"rq5":{"count","ratio"}}
//   GET  /api/admin/export.csv           assessment CSV
//
// Errors are {"error": <kind>, "message": <text>}.
class AssessmentServer {
 public:
  AssessmentServer(SurveyStore& store, ServerOptions options = {});
  ~AssessmentServer();

  AssessmentServer(const AssessmentServer&) = delete;
  AssessmentServer& operator=(const AssessmentServer&) = delete;

  // Binds to `port` (0 picks a free port) and returns the bound port.
  int Bind(const std::string& host, int port);
  // Serves until Stop(); call after Bind.
  bool Serve();
  void Stop();
  void WaitUntilReady() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace tig::assessment

#endif  // TIG_ASSESSMENT_SERVER_H_
