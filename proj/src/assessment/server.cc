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

#include "tig/assessment/server.h"

#include "httplib.h"
#include "json.hpp"
#include "tig/assessment/verdict.h"
#include "tig/core/errors.h"

namespace tig::assessment {
namespace {

using nlohmann::json;

json Optional(const std::optional<double>& value) {
  return value ? json(*value) : json(nullptr);
}

void SendJson(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void SendError(httplib::Response& res, int status, std::string_view kind,
               const std::string& message) {
  SendJson(res, status, {{"error", kind}, {"message", message}});
}

int StatusFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotFound:
      return 404;
    case ErrorKind::kDuplicateAssessor:
    case ErrorKind::kSlotExhausted:
      return 409;
    case ErrorKind::kInvalidInput:
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kParse:
      return 400;
    default:
      return 500;
  }
}

std::string_view ErrorName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDuplicateAssessor:
      return "duplicate_assessor";
    case ErrorKind::kSlotExhausted:
      return "slot_exhausted";
    case ErrorKind::kNotFound:
      return "not_found";
    case ErrorKind::kInvalidInput:
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kParse:
      return "invalid_request";
    default:
      return "internal";
  }
}

json PublicSurvey(const Survey& survey) {
  json questions = json::array();
  for (const Question& q : survey.questions) {
    json options = json::array();
    for (const AnswerOption& option : q.options) {
      options.push_back({{"id", option.id}, {"label", option.label}});
    }
    questions.push_back(
        {{"id", q.id}, {"image_url", "/" + q.image_ref}, {"options", std::move(options)}});
  }
  return {{"id", survey.id}, {"task", survey.task}, {"questions", std::move(questions)}};
}

}  // namespace

struct AssessmentServer::Impl {
  SurveyStore& store;
  ServerOptions options;
  httplib::Server http;

  Impl(SurveyStore& s, ServerOptions o) : store(s), options(std::move(o)) {}

  bool Authorized(const httplib::Request& req, httplib::Response& res) const {
    if (!options.admin_token || req.get_header_value("X-Admin-Token") == *options.admin_token) {
      return true;
    }
    SendError(res, 401, "unauthorized", "admin token required");
    return false;
  }

  template <typename Fn>
  httplib::Server::Handler Guard(Fn fn) {
    return [fn](const httplib::Request& req, httplib::Response& res) {
      try {
        fn(req, res);
      } catch (const Error& e) {
        SendError(res, StatusFor(e.kind()), ErrorName(e.kind()), e.what());
      } catch (const json::exception& e) {
        SendError(res, 400, "invalid_request", e.what());
      }
    };
  }

  void Routes() {
    if (!options.allow_origin.empty()) {
      http.set_default_headers({{"Access-Control-Allow-Origin", options.allow_origin},
                                {"Access-Control-Allow-Headers", "Content-Type, X-Admin-Token"},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
    }
    http.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
      res.status = 204;
    });
    http.set_mount_point("/images", (store.dir() / "images").string());

    http.Get("/api/surveys", Guard([this](const httplib::Request&, httplib::Response& res) {
      json list = json::array();
      for (const Survey& survey : store.surveys()) {
        const std::size_t open = store.OpenSlots(survey.id);
        if (open == 0) continue;
        list.push_back(
            {{"id", survey.id}, {"questions", survey.questions.size()}, {"open_slots", open}});
      }
      SendJson(res, 200, {{"surveys", std::move(list)}});
    }));

    http.Get(R"(/api/surveys/([^/]+))",
             Guard([this](const httplib::Request& req, httplib::Response& res) {
               SendJson(res, 200, PublicSurvey(store.survey(req.matches[1].str())));
             }));

    http.Post(R"(/api/surveys/([^/]+)/responses)",
              Guard([this](const httplib::Request& req, httplib::Response& res) {
                const std::string id = req.matches[1].str();
                const json body = json::parse(req.body);
                const bool accepted =
                    store.RecordResponse(id, body.at("assessor_id").get<std::string>(),
                                         body.at("answers").get<Answers>());
                SendJson(res, 201, {{"survey_id", id}, {"accepted", accepted}});
              }));

    http.Get("/api/admin/verdicts",
             Guard([this](const httplib::Request& req, httplib::Response& res) {
               if (!Authorized(req, res)) return;
               const std::vector<Response> responses = store.responses();
               json list = json::array();
               for (const ValidityVerdict& v :
                    Verdicts(BuildRecords(store.surveys(), responses))) {
                 list.push_back({{"image", v.image_ref},
                                 {"validity", ToString(v.validity)},
                                 {"preserved_label", v.preserved_label
                                                         ? json(*v.preserved_label)
                                                         : json(nullptr)}});
               }
               SendJson(res, 200, {{"verdicts", std::move(list)}});
             }));

    http.Get("/api/admin/metrics",
             Guard([this](const httplib::Request& req, httplib::Response& res) {
               if (!Authorized(req, res)) return;
               const std::vector<Response> responses = store.responses();
               const std::vector<AssessmentRecord> records =
                   BuildRecords(store.surveys(), responses);
               const std::vector<ValidityVerdict> verdicts = Verdicts(records);
               std::size_t counts[3] = {0, 0, 0};
               for (const ValidityVerdict& v : verdicts) ++counts[static_cast<int>(v.validity)];
               const CountRatio rq4 = Rq4Validity(verdicts, records.size());
               const CountRatio rq5 = Rq5LabelPreservation(verdicts);
               SendJson(res, 200,
                        {{"misclassifications", records.size()},
                         {"records", records.size()},
                         {"eligible", verdicts.size()},
                         {"valid", counts[0]},
                         {"invalid", counts[1]},
                         {"disagreement", counts[2]},
                         {"rq4", {{"count", rq4.count}, {"ratio", Optional(rq4.ratio)}}},
                         {"rq5", {{"count", rq5.count}, {"ratio", Optional(rq5.ratio)}}}});
             }));

    http.Get("/api/admin/export.csv",
             Guard([this](const httplib::Request& req, httplib::Response& res) {
               if (!Authorized(req, res)) return;
               const std::vector<Response> responses = store.responses();
               res.set_content(AssessmentCsv(BuildRecords(store.surveys(), responses)),
                               "text/csv");
             }));
  }
};

AssessmentServer::AssessmentServer(SurveyStore& store, ServerOptions options)
    : impl_(std::make_unique<Impl>(store, std::move(options))) {
  impl_->Routes();
}

AssessmentServer::~AssessmentServer() { Stop(); }

int AssessmentServer::Bind(const std::string& host, int port) {
  if (port == 0) {
    const int bound = impl_->http.bind_to_any_port(host);
    if (bound < 0) throw Error(ErrorKind::kIo, "cannot bind " + host);
    return bound;
  }
  if (!impl_->http.bind_to_port(host, port)) {
    throw Error(ErrorKind::kIo, "cannot bind " + host + ":" + std::to_string(port));
  }
  return port;
}

bool AssessmentServer::Serve() { return impl_->http.listen_after_bind(); }

void AssessmentServer::Stop() { impl_->http.stop(); }

void AssessmentServer::WaitUntilReady() const { impl_->http.wait_until_ready(); }

}  // namespace tig::assessment
