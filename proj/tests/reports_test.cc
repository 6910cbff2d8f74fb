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

#include "json_io.h"
#include "reports.h"

namespace holoq {
namespace {

TEST(Json, ComplexAndMatrixRoundTrip) {
  Mat m(2, 3);
  m << cd(1, 2), cd(-0.5, 0), cd(0, 1e-17), 3, cd(2, -2), cd(1e300, 0);
  EXPECT_EQ(mat_from_json(mat_to_json(m)), m);
  EXPECT_EQ(complex_from_json(json(2.5)), cd(2.5, 0));
  EXPECT_THROW(complex_from_json(json::array({1, 2, 3})), Error);
  EXPECT_THROW(mat_from_json(json::parse("[[[1,0]],[[1,0],[2,0]]]")), Error);
}

TEST(Json, PointValidatesCount) {
  ParamPoint p = ParamPoint::origin(Model::extended);
  p.z[2] = cd(0.1, 0.2);
  p.t[5] = -0.3;
  ParamPoint q = point_from_json(Model::extended, point_to_json(p));
  EXPECT_EQ(q.z, p.z);
  EXPECT_EQ(q.t, p.t);
  EXPECT_THROW(point_from_json(Model::full, point_to_json(p)), Error);
}

TEST(Reports, ConnectionBothAtOrigin) {
  reports::Outcome o = reports::connection(json::parse(R"({"model":"one-mode","mode":"both","cutoff":32})"));
  EXPECT_TRUE(o.passed);
  EXPECT_EQ(o.doc["schema_version"], kSchemaVersion);
  EXPECT_EQ(o.doc["series_branch"].size(), 2u);
  EXPECT_TRUE(o.doc["truncation"].contains("max_change"));
  EXPECT_EQ(o.doc["config"]["cutoff"], 32);
}

TEST(Reports, ConnectionReportsSeriesBranchOnlyBelowThreshold) {
  json r = {{"model", "one-mode"}, {"point", {{0.5, 0.0}, {0.0, 5e-5}}}};
  reports::Outcome o = reports::connection(r);
  EXPECT_EQ(o.doc["series_branch"], json::array({"beta"}));
}

TEST(Reports, GeneratorSuite) {
  reports::Outcome o = reports::verify("section4", json::object());
  EXPECT_TRUE(o.passed);
  for (const auto& c : o.doc["checks"]) EXPECT_TRUE(c["passed"].get<bool>()) << c["name"];
}

TEST(Reports, UnknownSuite) { EXPECT_THROW(reports::verify("nope", json::object()), Error); }

TEST(Reports, HolonomyOfConstantLoop) {
  const char* loop = R"({"schema_version":1,"model":"one-mode","waypoints":[[[0,0],[0.5,0]],[[0,0],[0.5,0]]]})";
  reports::Outcome o = reports::holonomy(loop, json::object());
  EXPECT_LT(o.doc["unitarity_defect"].get<double>(), 1e-12);
  EXPECT_LT(o.doc["distance_from_identity"].get<double>(), 1e-12);
}

}  // namespace
}  // namespace holoq
