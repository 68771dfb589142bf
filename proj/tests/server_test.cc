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

#include <fstream>
#include <thread>

#include <gtest/gtest.h>

#include "fakes.h"
#include "httplib.h"
#include "json.hpp"
#include "tig/assessment/server.h"
#include "tig/assessment/store.h"
#include "tig/assessment/survey.h"
#include "tig/core/random.h"

namespace tig::assessment {
namespace {

using json = nlohmann::json;
using testing::TempDir;

class ServerTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::vector<ImageItem> images;
    for (int i = 0; i < 4; ++i) {
      const std::string ref = "seed_" + std::to_string(i) + ".png";
      std::ofstream(source_ / ref) << "png-bytes-" << i;
      images.push_back({ref, ClassIndex(i), std::nullopt});
    }
    std::ofstream(source_ / "acq.png") << "acq";
    const std::vector<ImageItem> pool = {{"acq.png", 5, std::nullopt}};
    Rng rng(1);
    auto surveys = BuildSurveys(images, TaskSpec::ForTask("mnist"), pool, rng);
    MaterializeImages(surveys, source_.path(), store_dir_.path());
    store_.emplace(SurveyStore::Create(store_dir_.path(), std::move(surveys)));
  }

  void Start(ServerOptions options = {}) {
    server_ = std::make_unique<AssessmentServer>(*store_, std::move(options));
    port_ = server_->Bind("127.0.0.1", 0);
    thread_ = std::thread([this] { server_->Serve(); });
    server_->WaitUntilReady();
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
  }

  void TearDown() override {
    if (server_) server_->Stop();
    if (thread_.joinable()) thread_.join();
  }

  json Answers(const json& survey, const std::string& acq_choice) {
    json answers = json::object();
    const Survey& s = store_->surveys()[0];
    for (const auto& q : survey["questions"]) {
      const std::string id = q["id"];
      answers[id] = id == s.acq().id ? acq_choice : std::string("class:1");
    }
    return answers;
  }

  httplib::Result Submit(const std::string& assessor, const json& answers) {
    return client_->Post("/api/surveys/s0/responses",
                         json{{"assessor_id", assessor}, {"answers", answers}}.dump(),
                         "application/json");
  }

  TempDir source_;
  TempDir store_dir_;
  std::optional<SurveyStore> store_;
  std::unique_ptr<AssessmentServer> server_;
  std::unique_ptr<httplib::Client> client_;
  std::thread thread_;
  int port_ = 0;
};

TEST_F(ServerTest, SurveyLifecycle) {
  Start();
  auto list = client_->Get("/api/surveys");
  ASSERT_TRUE(list);
  EXPECT_EQ(list->status, 200);
  EXPECT_EQ(list->get_header_value("Access-Control-Allow-Origin"), "*");
  const json surveys = json::parse(list->body);
  ASSERT_EQ(surveys["surveys"].size(), 1u);

  auto got = client_->Get("/api/surveys/s0");
  ASSERT_TRUE(got);
  ASSERT_EQ(got->status, 200);
  const json survey = json::parse(got->body);
  ASSERT_EQ(survey["questions"].size(), 5u);
  for (const auto& q : survey["questions"]) {
    EXPECT_EQ(q["options"].size(), 11u);
    EXPECT_FALSE(q["options"][0].contains("kind"));
    EXPECT_FALSE(q.contains("expected_label"));
    auto image = client_->Get(q["image_url"].get<std::string>());
    ASSERT_TRUE(image);
    EXPECT_EQ(image->status, 200);
  }

  auto first = Submit("alice", Answers(survey, "class:5"));
  ASSERT_TRUE(first);
  EXPECT_EQ(first->status, 201);
  EXPECT_EQ(json::parse(first->body)["accepted"], true);

  auto duplicate = Submit("alice", Answers(survey, "class:5"));
  EXPECT_EQ(duplicate->status, 409);
  EXPECT_EQ(json::parse(duplicate->body)["error"], "duplicate_assessor");

  auto failing = Submit("bob", Answers(survey, "class:6"));
  EXPECT_EQ(failing->status, 201);
  EXPECT_EQ(json::parse(failing->body)["accepted"], false);

  auto full = Submit("carol", Answers(survey, "class:5"));
  EXPECT_EQ(full->status, 409);
  EXPECT_EQ(json::parse(full->body)["error"], "slot_exhausted");

  EXPECT_TRUE(json::parse(client_->Get("/api/surveys")->body)["surveys"].empty());
  EXPECT_EQ(store_->responses().size(), 2u);
}

TEST_F(ServerTest, BadRequests) {
  Start();
  EXPECT_EQ(client_->Get("/api/surveys/s7")->status, 404);
  auto malformed = client_->Post("/api/surveys/s0/responses", "{oops", "application/json");
  EXPECT_EQ(malformed->status, 400);
  auto incomplete = Submit("x", json{{"q0", "class:1"}});
  EXPECT_EQ(incomplete->status, 400);
  EXPECT_EQ(json::parse(incomplete->body)["error"], "invalid_request");
  EXPECT_EQ(client_->Options("/api/surveys")->status, 204);
}

TEST_F(ServerTest, AdminRoutesNeedToken) {
  Start(ServerOptions{"secret", "*"});
  EXPECT_EQ(client_->Get("/api/admin/metrics")->status, 401);
  const json survey = json::parse(client_->Get("/api/surveys/s0")->body);
  Submit("alice", Answers(survey, "class:5"));
  Submit("bob", Answers(survey, "class:5"));
  const httplib::Headers auth = {{"X-Admin-Token", "secret"}};
  auto metrics = client_->Get("/api/admin/metrics", auth);
  ASSERT_EQ(metrics->status, 200);
  const json m = json::parse(metrics->body);
  EXPECT_EQ(m["misclassifications"], 4);
  EXPECT_EQ(m["eligible"], 4);
  EXPECT_EQ(m["valid"], 4);
  EXPECT_EQ(m["rq4"]["ratio"], 1.0);
  // Everyone answered 1; only the image expected as 1 keeps its label.
  EXPECT_EQ(m["rq5"]["count"], 1);
  auto verdicts = client_->Get("/api/admin/verdicts", auth);
  EXPECT_EQ(json::parse(verdicts->body)["verdicts"].size(), 4u);
  auto csv = client_->Get("/api/admin/export.csv", auth);
  EXPECT_EQ(csv->status, 200);
  EXPECT_EQ(csv->body.rfind("image,survey,question", 0), 0u);
}

}  // namespace
}  // namespace tig::assessment
