// Copyright 2026 The Holoq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <string>

#include "holoq/holoq.h"
#include "json.hpp"

namespace {

using json = nlohmann::json;

class Capi : public ::testing::Test {
 protected:
  void SetUp() override { ASSERT_EQ(hq_context_create(&ctx_), HQ_OK); }
  void TearDown() override { hq_context_destroy(ctx_); }
  hq_context* ctx_ = nullptr;
};

TEST_F(Capi, ConnectionReport) {
  hq_report* r = nullptr;
  ASSERT_EQ(hq_connection(ctx_, R"({"model":"one-mode","point":[[0,0],[0.5,0]],"mode":"both"})", &r), HQ_OK);
  json doc = json::parse(hq_report_json(r));
  EXPECT_EQ(hq_report_json_length(r), std::string(hq_report_json(r)).size());
  EXPECT_EQ(hq_report_passed(r), 1);
  EXPECT_LT(doc["max_abs_paper_minus_numeric"].get<double>(), 1e-6);
  EXPECT_TRUE(doc["components"]["paper"].contains("A_beta"));
  hq_report_destroy(r);
}

TEST_F(Capi, ErrorsMapToStatuses) {
  hq_report* r = nullptr;
  EXPECT_EQ(hq_connection(ctx_, "{not json", &r), HQ_PARSE);
  EXPECT_EQ(r, nullptr);
  EXPECT_NE(std::string(hq_last_error(ctx_)), "");
  EXPECT_EQ(hq_connection(ctx_, R"({"model":"five-mode"})", &r), HQ_INVALID_ARGUMENT);
  EXPECT_EQ(hq_connection(ctx_, R"({"model":"one-mode","point":[[0,0]]})", &r), HQ_PARSE);
  EXPECT_EQ(hq_verify(ctx_, nullptr, nullptr, &r), HQ_INVALID_ARGUMENT);
  EXPECT_EQ(hq_holonomy(ctx_, R"({"model":"one-mode","waypoints":[[[0,0],[0,0]],[[0.1,0],[0,0]]]})", "", &r),
            HQ_INVALID_ARGUMENT);
  EXPECT_EQ(hq_connection(nullptr, "{}", &r), HQ_INVALID_ARGUMENT);
}

TEST_F(Capi, ErrorIsClearedOnSuccess) {
  hq_report* r = nullptr;
  EXPECT_NE(hq_verify(ctx_, "nope", "{}", &r), HQ_OK);
  ASSERT_EQ(hq_verify(ctx_, "section4", "{}", &r), HQ_OK);
  EXPECT_EQ(std::string(hq_last_error(ctx_)), "");
  hq_report_destroy(r);
}

TEST(CapiStatic, Names) {
  EXPECT_STREQ(hq_status_name(HQ_CHECK_FAILED), "check_failed");
  EXPECT_STREQ(hq_status_name(HQ_DOMAIN), "domain");
  EXPECT_NE(std::string(hq_version()), "");
  EXPECT_STREQ(hq_report_json(nullptr), "");
  hq_report_destroy(nullptr);
}

}  // namespace
